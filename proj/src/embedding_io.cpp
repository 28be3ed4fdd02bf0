#include "slk/embedding_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "slk/errors.hpp"

namespace slk {

namespace {

using json = nlohmann::ordered_json;

Rational coord(const json& v, const std::string& where, int k) {
    const json& num = v[2 * k];
    const json& den = v[2 * k + 1];
    if (!num.is_number_integer() || !den.is_number_integer())
        throw ParseError(where + ": coordinates must be integer pairs");
    long long d = den.get<long long>();
    if (d == 0) throw ParseError(where + ": zero denominator");
    return make_rational(num.get<long long>(), d);
}

Point3 parse_point(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 6)
        throw ParseError(where + ": expected [xn,xd,yn,yd,zn,zd]");
    return Point3{coord(v, where, 0), coord(v, where, 1), coord(v, where, 2)};
}

json point_to_json(const Point3& p) {
    json v = json::array();
    for (const Rational* c : {&p.x, &p.y, &p.z}) {
        if (!c->get_num().fits_slong_p() || !c->get_den().fits_slong_p())
            throw ParseError("coordinate exceeds the integer range of the file format");
        v.push_back(static_cast<long long>(c->get_num().get_si()));
        v.push_back(static_cast<long long>(c->get_den().get_si()));
    }
    return v;
}

} // namespace

PLEmbedding read_embedding(std::istream& in, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ParseError(source_name + ": " + err.what());
    }
    if (!doc.is_object()) throw ParseError(source_name + ": top level must be an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "format_version" && key != "n" && key != "vertices" && key != "bends")
            throw ParseError(source_name + ": unknown top-level field '" + key + "'");
    }
    if (!doc.contains("format_version") || doc["format_version"] != 1)
        throw ParseError(source_name + ": format_version must be 1");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(source_name + ": missing integer field 'n'");
    PLEmbedding e;
    e.n = doc["n"].get<int>();
    if (e.n < 1) throw ParseError(source_name + ": n must be positive");
    if (!doc.contains("vertices") || !doc["vertices"].is_array() ||
        static_cast<int>(doc["vertices"].size()) != e.n)
        throw ParseError(source_name + ": 'vertices' must hold exactly n entries");
    for (int i = 0; i < e.n; ++i) {
        e.vertex_positions.push_back(
            parse_point(doc["vertices"][i], source_name + ": vertex " + std::to_string(i + 1)));
    }
    if (doc.contains("bends")) {
        if (!doc["bends"].is_object()) throw ParseError(source_name + ": 'bends' must be an object");
        for (const auto& [key, value] : doc["bends"].items()) {
            auto dash = key.find('-');
            int i = 0, j = 0;
            try {
                i = std::stoi(key.substr(0, dash));
                j = std::stoi(key.substr(dash + 1));
            } catch (...) {
                throw ParseError(source_name + ": bad bend key '" + key + "'");
            }
            if (dash == std::string::npos || i < 1 || j <= i || j > e.n)
                throw ParseError(source_name + ": bend key '" + key +
                                 "' is not an edge i-j with i < j <= n");
            if (!value.is_array())
                throw ParseError(source_name + ": bends of " + key + " must be an array");
            std::vector<Point3> chain;
            for (std::size_t k = 0; k < value.size(); ++k) {
                chain.push_back(parse_point(value[k], source_name + ": bend " +
                                                          std::to_string(k + 1) + " of " + key));
            }
            if (!chain.empty()) e.bends[{i, j}] = std::move(chain);
        }
    }
    return e;
}

PLEmbedding read_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_embedding(in, path);
}

void write_embedding(std::ostream& out, const PLEmbedding& e) {
    json doc;
    doc["format_version"] = 1;
    doc["n"] = e.n;
    json verts = json::array();
    for (const auto& p : e.vertex_positions) verts.push_back(point_to_json(p));
    doc["vertices"] = std::move(verts);
    if (!e.bends.empty()) {
        json bends = json::object();
        for (const auto& [key, chain] : e.bends) {
            json arr = json::array();
            for (const auto& p : chain) arr.push_back(point_to_json(p));
            bends[std::to_string(key.first) + "-" + std::to_string(key.second)] = std::move(arr);
        }
        doc["bends"] = std::move(bends);
    }
    out << doc.dump(2) << "\n";
}

void write_embedding_file(const std::string& path, const PLEmbedding& e) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    write_embedding(out, e);
    out.close();
    if (!out) throw ParseError(path + ": write failed");
}

} // namespace slk
