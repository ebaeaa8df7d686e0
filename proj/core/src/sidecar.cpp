#include "hypercol/sidecar.hpp"

#include "hypercol/error.hpp"
#include "text_util.hpp"

#include <ostream>

namespace hypercol {

using detail::for_each_record;
using detail::parse_int;
using detail::parse_vertex;

namespace {

void write_comments(std::ostream& out, std::span<const std::string> comments)
{
    for (const std::string& c : comments)
        out << "c " << c << '\n';
}

void write_hitting_set(std::ostream& out, std::span<const Vertex> z)
{
    out << 'Z';
    for (Vertex v : z)
        out << ' ' << v;
    out << '\n';
}

void write_provenance(std::ostream& out, const std::vector<std::string>& prov)
{
    for (std::size_t v = 1; v < prov.size(); ++v)
        out << "prov " << v << ' ' << prov[v] << '\n';
}

} // namespace

void write_gadget_sidecar(std::ostream& out, const GadgetCertificate& cert, std::span<const std::string> comments)
{
    write_comments(out, comments);
    out << "g " << to_string(cert.kind) << '\n';
    out << "anchor " << cert.anchors[0] << ' ' << cert.anchors[1] << ' ' << cert.anchors[2] << '\n';
    write_hitting_set(out, cert.hitting_set);
    for (Vertex v = 1; v <= cert.witness.num_vertices(); ++v)
        if (cert.witness.is_colored(v))
            out << "witness " << v << ' ' << cert.witness.color(v) << '\n';
    write_provenance(out, cert.provenance);
}

void write_reduction_sidecar(std::ostream& out, const ReductionOutput& r, std::span<const std::string> comments)
{
    write_comments(out, comments);
    write_hitting_set(out, r.hitting_set);
    for (std::size_t i = 0; i < r.source.num_edges(); ++i)
        out << "ecolor " << r.source.edge(i)[0] << ' ' << r.source.edge(i)[1] << ' ' << r.edge_coloring[i] << '\n';
    write_provenance(out, r.provenance);
}

Sidecar read_sidecar(std::istream& in, std::size_t n)
{
    Sidecar s;
    s.provenance.assign(n + 1, {});
    for_each_record(in, [&](std::size_t line, const std::vector<std::string_view>& tok) {
        const std::string_view key = tok[0];
        if (key == "g") {
            if (tok.size() != 2 || (tok[1] != "G1" && tok[1] != "G2"))
                throw ParseError(line, "expected 'g G1' or 'g G2'");
            if (s.kind)
                throw ParseError(line, "second gadget kind line");
            s.kind = tok[1] == "G1" ? GadgetKind::G1 : GadgetKind::G2;
        } else if (key == "anchor") {
            if (tok.size() != 4)
                throw ParseError(line, "expected 'anchor <a> <b> <c>'");
            if (s.anchors)
                throw ParseError(line, "second anchor line");
            s.anchors = std::array<Vertex, 3>{parse_vertex(tok[1], line, n), parse_vertex(tok[2], line, n),
                                              parse_vertex(tok[3], line, n)};
        } else if (key == "Z") {
            for (std::size_t i = 1; i < tok.size(); ++i)
                s.hitting_set.push_back(parse_vertex(tok[i], line, n));
        } else if (key == "witness") {
            if (tok.size() != 3)
                throw ParseError(line, "expected 'witness <v> <color>'");
            if (!s.witness)
                s.witness = PartialColoring(n, 3);
            const Vertex v = parse_vertex(tok[1], line, n);
            const auto c = parse_int<Color>(tok[2], line, "color");
            if (c < 1 || c > 3)
                throw ParseError(line, "witness color must be 1..3");
            if (s.witness->is_colored(v))
                throw ParseError(line, "second witness color for vertex " + std::to_string(v));
            s.witness->assign(v, c);
        } else if (key == "ecolor") {
            if (tok.size() != 4)
                throw ParseError(line, "expected 'ecolor <x> <y> <k>'");
            s.edge_colors.emplace_back(parse_int<Vertex>(tok[1], line, "vertex"),
                                       parse_int<Vertex>(tok[2], line, "vertex"),
                                       parse_int<Color>(tok[3], line, "color"));
        } else if (key == "prov") {
            if (tok.size() != 3)
                throw ParseError(line, "expected 'prov <v> <role>'");
            const Vertex v = parse_vertex(tok[1], line, n);
            if (!s.provenance[v].empty())
                throw ParseError(line, "second role for vertex " + std::to_string(v));
            s.provenance[v] = std::string(tok[2]);
        } else {
            throw ParseError(line, "unknown record '" + std::string(key) + "'");
        }
    });
    return s;
}

GadgetCertificate to_certificate(const Sidecar& s)
{
    if (!s.kind)
        throw ParseError(0, "sidecar has no 'g' line");
    if (!s.anchors)
        throw ParseError(0, "sidecar has no 'anchor' line");
    if (!s.witness)
        throw ParseError(0, "sidecar has no witness");
    GadgetCertificate cert;
    cert.kind = *s.kind;
    cert.anchors = *s.anchors;
    cert.hitting_set = s.hitting_set;
    cert.witness = *s.witness;
    cert.provenance = s.provenance;
    return cert;
}

} // namespace hypercol
