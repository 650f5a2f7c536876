#ifndef LHOM_ERRORS_HPP
#define LHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lhom
{
    // Bad arguments, malformed files, violated operation preconditions.
    // The CLI maps these to exit code 2.
    class input_error : public std::runtime_error
    {
    public:
        explicit input_error(const std::string & what) : std::runtime_error(what) {}
    };

    class parse_error : public input_error
    {
    public:
        parse_error(const std::string & what, int line) :
            input_error("line " + std::to_string(line) + ": " + what),
            line_(line) {}

        int line() const { return line_; }

    private:
        int line_;
    };

    // A violated internal invariant, i.e. a bug. The CLI maps these to exit code 3.
    class internal_error : public std::logic_error
    {
    public:
        explicit internal_error(const std::string & what) : std::logic_error(what) {}
    };
}

#endif
