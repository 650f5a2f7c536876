#include <lhom/digraph.hpp>
#include <lhom/errors.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lhom
{
    Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) :
        n_(n),
        arcs_(std::move(arcs))
    {
        if (n_ < 0)
            throw input_error("negative vertex count");
        std::sort(arcs_.begin(), arcs_.end());
        if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
            throw input_error("duplicate arc");
        adj_.assign(static_cast<std::size_t>(n_) * n_, false);
        out_.assign(n_, {});
        in_.assign(n_, {});
        for (auto [u, v] : arcs_) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_)
                throw input_error("arc endpoint out of range");
            adj_[static_cast<std::size_t>(u) * n_ + v] = true;
            out_[u].push_back(v);
            in_[v].push_back(u);
        }
    }

    void Digraph::check_vertex(int v) const
    {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    bool Digraph::has_arc(int u, int v) const
    {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u) * n_ + v];
    }

    const std::vector<int> & Digraph::out_neighbours(int u) const
    {
        check_vertex(u);
        return out_[u];
    }

    const std::vector<int> & Digraph::in_neighbours(int u) const
    {
        check_vertex(u);
        return in_[u];
    }

    bool has_edge(const Digraph & d, int u, int v, Direction dir)
    {
        return dir == Direction::forward ? d.has_arc(u, v) : d.has_arc(v, u);
    }

    Digraph parse_digraph(std::istream & in)
    {
        std::string line;
        int lineno = 0;
        int n = -1;
        std::vector<std::pair<int, int>> arcs;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            std::istringstream ss(line);
            if (n < 0) {
                if (! (ss >> n))
                    continue;
                if (n < 0)
                    throw parse_error("vertex count must be non-negative", lineno);
                std::string rest;
                if (ss >> rest)
                    throw parse_error("trailing tokens after vertex count", lineno);
                continue;
            }
            int u, v;
            if (! (ss >> u)) {
                continue;
            }
            if (! (ss >> v))
                throw parse_error("expected `u v`", lineno);
            std::string rest;
            if (ss >> rest)
                throw parse_error("trailing tokens after arc", lineno);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error("arc endpoint out of range", lineno);
            if (std::find(arcs.begin(), arcs.end(), std::make_pair(u, v)) != arcs.end())
                throw parse_error("duplicate arc " + std::to_string(u) + " " + std::to_string(v), lineno);
            arcs.emplace_back(u, v);
        }
        if (n < 0)
            throw parse_error("missing vertex count header", lineno);
        return Digraph(n, std::move(arcs));
    }

    Digraph parse_digraph(const std::string & text)
    {
        std::istringstream in(text);
        return parse_digraph(in);
    }

    Digraph load_digraph(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw input_error("cannot open '" + path + "'");
        return parse_digraph(in);
    }

    std::string format_digraph(const Digraph & d)
    {
        std::ostringstream out;
        out << d.vertex_count() << '\n';
        for (auto [u, v] : d.arcs())
            out << u << ' ' << v << '\n';
        return out.str();
    }
}
