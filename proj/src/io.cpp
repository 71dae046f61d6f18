#include "bchrome/io.hpp"

#include "bchrome/error.hpp"

#include <json.hpp>

#include <charconv>
#include <limits>
#include <set>
#include <sstream>

namespace bchrome {

namespace {

[[noreturn]] void bad_graph6(std::size_t pos, const std::string& what)
{
    throw Error(ErrorCode::MalformedGraph6, "position " + std::to_string(pos) + ": " + what);
}

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::size_t kGraph6MaxOrder = 258047;

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header)
        pos = kGraph6Header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size())
            bad_graph6(i, "unexpected end of input");
        const int b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126)
            bad_graph6(i, "byte " + std::to_string(b) + " outside 63..126");
        return b - 63;
    };

    std::size_t n = 0;
    const int first = byte_at(pos);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        pos += 1;
    } else {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
            bad_graph6(pos + 1, "8-byte order form is not supported");
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<std::size_t>(byte_at(pos + i));
        if (n <= 62)
            bad_graph6(pos, "extended order form used for n <= 62");
        if (n > kGraph6MaxOrder)
            bad_graph6(pos, "order too large");
        pos += 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t chars = (bits + 5) / 6;
    if (text.size() - pos != chars)
        bad_graph6(text.size() < pos + chars ? text.size() : pos + chars,
                   "expected " + std::to_string(chars) + " body bytes, found " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            const int value = byte_at(pos + bit / 6);
            if (value & (1 << (5 - bit % 6)))
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    if (bits % 6 != 0) {
        const int last = byte_at(pos + chars - 1);
        const int pad_mask = (1 << (6 - bits % 6)) - 1;
        if (last & pad_mask)
            bad_graph6(pos + chars - 1, "nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw Error(ErrorCode::InvalidParameter, "graph6 supports at most 258047 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

namespace {

[[noreturn]] void bad_dimacs(std::size_t line, const std::string& what)
{
    throw Error(ErrorCode::MalformedDimacs, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

long long parse_count(std::string_view field, std::size_t line)
{
    long long value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || value < 0)
        bad_dimacs(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    return value;
}

} // namespace

Graph parse_dimacs(std::string_view text)
{
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty() || fields[0] == "c")
            continue;
        if (fields[0] == "p") {
            if (n)
                bad_dimacs(line_no, "second p-line");
            if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col"))
                bad_dimacs(line_no, "expected 'p edge <n> <m>'");
            const long long order = parse_count(fields[2], line_no);
            if (order > std::numeric_limits<Vertex>::max())
                bad_dimacs(line_no, "order too large");
            parse_count(fields[3], line_no);
            n = static_cast<std::size_t>(order);
        } else if (fields[0] == "e") {
            if (!n)
                bad_dimacs(1, "missing p-line before first edge");
            if (fields.size() != 3)
                bad_dimacs(line_no, "expected 'e <u> <v>'");
            const long long u = parse_count(fields[1], line_no);
            const long long v = parse_count(fields[2], line_no);
            if (u < 1 || v < 1 || u > static_cast<long long>(*n) || v > static_cast<long long>(*n))
                bad_dimacs(line_no, "endpoint outside 1.." + std::to_string(*n));
            if (u == v)
                bad_dimacs(line_no, "self-loop");
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            bad_dimacs(line_no, "unknown line type '" + std::string(fields[0]) + "'");
        }
    }
    if (!n)
        bad_dimacs(1, "missing p-line");
    return Graph::from_edges(*n, edges);
}

std::string write_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text)
{
    if (!text.empty() && (text.front() == 'p' || text.front() == 'c'))
        return parse_dimacs(text);
    return parse_graph6(text);
}

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& path, const std::string& what)
{
    throw Error(ErrorCode::SchemaViolation, path + ": " + what);
}

const json& field(const json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        schema(std::string("/") + key, "missing");
    return *it;
}

long long integer(const json& value, const std::string& path)
{
    if (!value.is_number_integer())
        schema(path, "expected an integer");
    return value.get<long long>();
}

long long non_negative(const json& value, const std::string& path)
{
    const long long v = integer(value, path);
    if (v < 0)
        schema(path, "must be non-negative");
    return v;
}

std::optional<int> optional_int(const json& value, const std::string& path)
{
    if (value.is_null())
        return std::nullopt;
    return static_cast<int>(non_negative(value, path));
}

std::vector<Vertex> vertex_list(const json& value, const std::string& path, std::size_t n)
{
    if (!value.is_array())
        schema(path, "expected an array");
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const auto v = non_negative(value[i], path + "/" + std::to_string(i));
        if (static_cast<std::size_t>(v) >= n)
            schema(path + "/" + std::to_string(i), "vertex out of range");
        out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

const std::set<std::string> kKnownFields = {
    "version", "n", "m", "d", "girth", "k", "strategy", "center",
    "neighbor_order", "row_order", "colors", "b_vertices", "provenance",
};

} // namespace

Certificate read_certificate(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema("/", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        schema("/", "expected an object");
    for (const auto& [key, _] : doc.items())
        if (!kKnownFields.contains(key))
            schema("/" + key, "unknown field");

    if (integer(field(doc, "version"), "/version") != kCertificateVersion)
        schema("/version", "unsupported version");

    Certificate cert;
    cert.graph.n = static_cast<std::size_t>(non_negative(field(doc, "n"), "/n"));
    cert.graph.m = static_cast<std::size_t>(non_negative(field(doc, "m"), "/m"));
    cert.graph.degree = optional_int(field(doc, "d"), "/d");
    cert.graph.girth = optional_int(field(doc, "girth"), "/girth");
    const auto k = non_negative(field(doc, "k"), "/k");
    if (k < 1 || k > std::numeric_limits<Color>::max())
        schema("/k", "must be positive");
    cert.k = static_cast<Color>(k);

    const auto& strategy = field(doc, "strategy");
    if (!strategy.is_string())
        schema("/strategy", "expected a string");
    cert.strategy = strategy.get<std::string>();

    const std::size_t n = cert.graph.n;
    const auto center = non_negative(field(doc, "center"), "/center");
    if (static_cast<std::size_t>(center) >= n)
        schema("/center", "vertex out of range");
    cert.center = static_cast<Vertex>(center);
    cert.neighbor_order = vertex_list(field(doc, "neighbor_order"), "/neighbor_order", n);
    cert.row_order = vertex_list(field(doc, "row_order"), "/row_order", n);

    const auto& colors = field(doc, "colors");
    if (!colors.is_array())
        schema("/colors", "expected an array");
    if (colors.size() != n)
        schema("/colors", "length " + std::to_string(colors.size()) + " != n = " + std::to_string(n));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const auto path = "/colors/" + std::to_string(i);
        const auto c = integer(colors[i], path);
        if (c < 1 || c > cert.k)
            schema(path, "color " + std::to_string(c) + " outside 1.." + std::to_string(cert.k));
        cert.colors.push_back(static_cast<Color>(c));
    }

    const auto& claims = field(doc, "b_vertices");
    if (!claims.is_object())
        schema("/b_vertices", "expected an object");
    for (const auto& [key, value] : claims.items()) {
        const auto path = "/b_vertices/" + key;
        int cls = 0;
        const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), cls);
        if (ec != std::errc() || end != key.data() + key.size() || cls < 1 || cls > cert.k)
            schema(path, "class key must be an integer in 1..k");
        const auto v = non_negative(value, path);
        if (static_cast<std::size_t>(v) >= n)
            schema(path, "vertex out of range");
        cert.b_vertices[cls] = static_cast<Vertex>(v);
    }

    const auto& provenance = field(doc, "provenance");
    if (!provenance.is_string())
        schema("/provenance", "expected a string");
    cert.provenance = provenance.get<std::string>();
    return cert;
}

std::string write_certificate(const Certificate& cert)
{
    json doc = json::object();
    doc["version"] = kCertificateVersion;
    doc["n"] = cert.graph.n;
    doc["m"] = cert.graph.m;
    doc["d"] = cert.graph.degree ? json(*cert.graph.degree) : json(nullptr);
    doc["girth"] = cert.graph.girth ? json(*cert.graph.girth) : json(nullptr);
    doc["k"] = cert.k;
    doc["strategy"] = cert.strategy;
    doc["center"] = cert.center;
    doc["neighbor_order"] = cert.neighbor_order;
    doc["row_order"] = cert.row_order;
    doc["colors"] = cert.colors;
    json claims = json::object();
    for (auto [cls, v] : cert.b_vertices)
        claims[std::to_string(cls)] = v;
    doc["b_vertices"] = claims;
    doc["provenance"] = cert.provenance;
    return doc.dump(2) + "\n";
}

namespace {

json optional_json(const auto& value)
{
    return value ? json(*value) : json(nullptr);
}

json census_entry(const VertexCensus& v)
{
    json entry = json::object();
    entry["vertex"] = v.vertex;
    entry["c6_through"] = v.c6_through;
    entry["c6_in_n2"] = optional_json(v.c6_in_n2);
    entry["closed_bunches"] = optional_json(v.closed_bunches);
    json strategies = json::array();
    for (Strategy s : v.strategies)
        strategies.push_back(std::string(to_string(s)));
    entry["strategies"] = strategies;
    entry["reasons"] = v.reasons;
    return entry;
}

} // namespace

std::string hypothesis_report_json(const HypothesisReport& report)
{
    json doc = json::object();
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["regular"] = report.d.has_value();
    doc["d"] = optional_json(report.d);
    doc["girth"] = optional_json(report.girth);
    doc["degree_at_least_7"] = report.degree_at_least_7;
    doc["girth_exactly_5"] = report.girth_exactly_5;
    doc["contains_c6"] = report.contains_c6;
    doc["order_bound"] = report.d ? json(report.order_bound) : json(nullptr);
    doc["within_order_bound"] = report.within_order_bound;
    std::size_t applicable = 0;
    json vertices = json::array();
    for (const auto& v : report.vertices) {
        applicable += v.strategies.empty() ? 0 : 1;
        vertices.push_back(census_entry(v));
    }
    doc["vertices_with_strategy"] = applicable;
    doc["vertices"] = vertices;
    return doc.dump(2) + "\n";
}

std::string census_json(const Graph& g, const std::vector<VertexCensus>& vertices)
{
    const auto fp = fingerprint(g);
    json doc = json::object();
    doc["n"] = fp.n;
    doc["m"] = fp.m;
    doc["regular"] = fp.degree.has_value();
    doc["d"] = optional_json(fp.degree);
    doc["girth"] = optional_json(fp.girth);
    json list = json::array();
    for (const auto& v : vertices) {
        json entry = json::object();
        entry["vertex"] = v.vertex;
        entry["c6_through"] = v.c6_through;
        entry["c6_in_n2"] = optional_json(v.c6_in_n2);
        entry["closed_bunches"] = optional_json(v.closed_bunches);
        list.push_back(entry);
    }
    doc["vertices"] = list;
    return doc.dump(2) + "\n";
}

} // namespace bchrome
