#pragma once

#include "hypercol/error.hpp"
#include "hypercol/hypergraph.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hypercol::detail {

inline std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view tok, std::size_t line, std::string_view what)
{
    Int value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
    return value;
}

inline Vertex parse_vertex(std::string_view tok, std::size_t line, std::size_t n)
{
    const auto v = parse_int<std::uint64_t>(tok, line, "vertex");
    if (v < 1 || v > n)
        throw ParseError(line, "vertex " + std::string(tok) + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(v);
}

// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto tokens = split(line);
        if (tokens.empty() || tokens.front() == "c")
            continue;
        fn(lineno, tokens);
    }
}

} // namespace hypercol::detail
