/*
   Copyright 2026 The bivar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "bivar/io.hpp"

#include <zlib.h>

#include <fstream>
#include <sstream>

namespace bivar {

namespace {

json rational(const Rational& r) { return r.get_str(); }

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError("bad rational '" + j.get<std::string>() + "'");
    }
}

json domain_json(const Domain& d) {
    json out = json::array();
    for (const auto& p : d) out.push_back(to_json(p));
    return out;
}

Domain domain_from(const json& j) {
    if (!j.is_array()) throw SchemaError("domain must be an array of [i,j] pairs");
    std::vector<Index> pts;
    for (const auto& p : j) pts.push_back(index_from_json(p));
    try {
        return Domain(pts);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("bad domain: ") + e.what());
    }
}

Index key_index(const std::string& s) {
    try {
        return parse_index(s);
    } catch (const std::exception&) {
        throw SchemaError("bad label key '" + s + "'");
    }
}

void check_header(const json& j, const std::string& kind) {
    if (!j.is_object()) throw SchemaError("top level must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != schema_version)
        throw SchemaError("unsupported or missing schema_version");
    if (j.value("kind", "") != kind) throw SchemaError("expected kind '" + kind + "'");
}

std::string gunzip_file(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) throw SchemaError("cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int n;
    while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    const bool failed = n < 0;
    gzclose(f);
    if (failed) throw SchemaError("corrupt gzip stream in " + path);
    return out;
}

}  // namespace

json to_json(const Index& i) { return json::array({i.i, i.j}); }

Index index_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw SchemaError("label must be [i,j]");
    const Index out{j[0].get<int>(), j[1].get<int>()};
    if (out.i < 0 || out.j < 0) throw SchemaError("label must be nonnegative");
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw SchemaError("ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from(j[r][c]);
    }
    return m;
}

json scheme_to_json(const VertexScheme& s) {
    json mats = json::object();
    const std::size_t v = s.vertex_count();
    for (std::size_t t = 0; t < s.class_count(); ++t) {
        const BitMatrix& b = s.bits_at(t);
        json rows = json::array();
        for (std::size_t x = 0; x < v; ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < v; ++y) row.push_back(b.test(x, y) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        mats[to_string(s.domain()[t])] = std::move(rows);
    }
    return {{"schema_version", schema_version},
            {"kind", "vertex"},
            {"domain", domain_json(s.domain())},
            {"vertex_count", v},
            {"matrices", std::move(mats)}};
}

VertexScheme scheme_from_json(const json& j) {
    check_header(j, "vertex");
    try {
        const Domain d = domain_from(j.at("domain"));
        const std::size_t v = j.at("vertex_count").get<std::size_t>();
        const json& mats = j.at("matrices");
        if (!mats.is_object() || mats.size() != d.size()) throw SchemaError("need one matrix per domain point");
        std::vector<BitMatrix> bits;
        for (const auto& lab : d) {
            const json& rows = mats.at(to_string(lab));
            if (!rows.is_array() || rows.size() != v) throw SchemaError("matrix " + to_string(lab) + " has wrong size");
            BitMatrix b(v);
            for (std::size_t x = 0; x < v; ++x) {
                const json& row = rows[x];
                if (!row.is_array() || row.size() != v) throw SchemaError("matrix " + to_string(lab) + " has a short row");
                for (std::size_t y = 0; y < v; ++y) {
                    const int e = row[y].get<int>();
                    if (e == 1) {
                        b.set(x, y);
                    } else if (e != 0) {
                        throw SchemaError("matrix entries must be 0 or 1");
                    }
                }
            }
            bits.push_back(std::move(b));
        }
        return VertexScheme(d, std::move(bits));
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed vertex scheme: ") + e.what());
    }
}

json tensor_to_json(const IntersectionTensor& t) {
    json rows = json::object();
    for (const auto& [a, L] : t.lmatrices()) {
        json row = json::object();
        for (std::size_t bp = 0; bp < t.domain().size(); ++bp) {
            json col = json::object();
            for (std::size_t cp = 0; cp < t.domain().size(); ++cp)
                if (sgn(L(cp, bp)) != 0) col[to_string(t.domain()[cp])] = rational(L(cp, bp));
            row[to_string(t.domain()[bp])] = std::move(col);
        }
        rows[to_string(a)] = std::move(row);
    }
    json out{{"schema_version", schema_version}, {"kind", "algebra"}, {"domain", domain_json(t.domain())}, {"rows", std::move(rows)}};
    if (auto v = t.vertex_count()) out["vertex_count"] = rational(*v);
    return out;
}

IntersectionTensor tensor_from_json(const json& j) {
    check_header(j, "algebra");
    try {
        const Domain d = domain_from(j.at("domain"));
        std::map<Index, Matrix> lm;
        for (const auto& [akey, row] : j.at("rows").items()) {
            const Index a = key_index(akey);
            if (!d.contains(a)) throw SchemaError("row " + akey + " outside the domain");
            Matrix L(d.size(), d.size());
            for (const auto& [bkey, col] : row.items()) {
                const Index b = key_index(bkey);
                if (!d.contains(b)) throw SchemaError("label " + bkey + " outside the domain");
                for (const auto& [ckey, val] : col.items()) {
                    const Index c = key_index(ckey);
                    if (!d.contains(c)) throw SchemaError("label " + ckey + " outside the domain");
                    L(d.position(c), d.position(b)) = rational_from(val);
                }
            }
            lm.emplace(a, std::move(L));
        }
        return IntersectionTensor(d, std::move(lm));
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed algebra scheme: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("inconsistent algebra scheme: ") + e.what());
    }
}

json polys_to_json(const PolyFamily& v) {
    json out = json::object();
    for (const auto& [ij, p] : v) {
        json terms = json::object();
        for (const auto& [mono, c] : p.terms()) terms[to_string(mono)] = rational(c);
        std::ostringstream os;
        os << p;
        out[to_string(ij)] = {{"terms", std::move(terms)}, {"text", os.str()}};
    }
    return out;
}

json verdict_to_json(const MetricVerdict& v) {
    json viol = json::array();
    for (const auto& x : v.violations)
        viol.push_back({{"condition", to_string(x.condition)}, {"at", to_json(x.at)}, {"term", to_json(x.term)}});
    return {{"passed", v.passed}, {"violations", std::move(viol)}};
}

json minimal_type_to_json(const MinimalType& m) {
    const TypeRegion& r = m.region;
    json out{{"feasible", r.feasible},
             {"region",
              {{"alpha", {rational(r.alpha_lo), rational(r.alpha_hi)}},
               {"beta", {rational(r.beta_lo), rational(r.beta_hi)}},
               {"beta_hi_open", r.beta_hi_open}}},
             {"bivariate_p", m.bivariate_p()}};
    if (m.canonical) out["canonical"] = {{"alpha", rational(m.canonical->alpha())}, {"beta", rational(m.canonical->beta())}};
    json dom{{"compatible", m.domain.compatible}};
    if (m.domain.witness) dom["witness"] = {to_json(m.domain.witness->first), to_json(m.domain.witness->second)};
    out["domain_check"] = std::move(dom);
    json nv = json::array();
    for (const auto& x : m.nonvanishing)
        nv.push_back({{"condition", to_string(x.condition)}, {"at", to_json(x.at)}, {"term", to_json(x.term)}});
    out["nonvanishing_failures"] = std::move(nv);
    return out;
}

json axioms_to_json(const AxiomReport& r) {
    json out = json::object();
    for (const auto& a : r.results) {
        json e{{"passed", a.passed}};
        if (!a.witness.empty()) e["witness"] = a.witness;
        out[a.axiom] = std::move(e);
    }
    return out;
}

json spectrum_to_json(const Spectrum& sp) {
    json P = json::object(), Q = json::object(), val = json::object(), mult = json::object();
    for (const auto& mn : sp.dual_domain) {
        json row = json::object();
        for (const auto& ij : sp.domain) row[to_string(ij)] = rational(sp.p(ij, mn));
        P[to_string(mn)] = std::move(row);
        mult[to_string(mn)] = rational(sp.multiplicity(mn));
    }
    for (const auto& ij : sp.domain) {
        json row = json::object();
        for (const auto& mn : sp.dual_domain) row[to_string(mn)] = rational(sp.q(mn, ij));
        Q[to_string(ij)] = std::move(row);
        val[to_string(ij)] = rational(sp.valence(ij));
    }
    return {{"domain", domain_json(sp.domain)},
            {"dual_domain", domain_json(sp.dual_domain)},
            {"P", std::move(P)},
            {"Q", std::move(Q)},
            {"valences", std::move(val)},
            {"multiplicities", std::move(mult)},
            {"vertex_count", rational(sp.vertex_count)}};
}

void write_json_file(const std::string& path, const json& j, bool gzip) {
    const std::string text = j.dump(1) + "\n";
    if (gzip) {
        gzFile f = gzopen(path.c_str(), "wb");
        if (!f) throw SchemaError("cannot write " + path);
        const int n = gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
        const int rc = gzclose(f);
        if (n != static_cast<int>(text.size()) || rc != Z_OK) throw SchemaError("gzip write failed for " + path);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << text;
    if (!out) throw SchemaError("write failed for " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (text.size() >= 2 && static_cast<unsigned char>(text[0]) == 0x1f && static_cast<unsigned char>(text[1]) == 0x8b)
        text = gunzip_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_scheme_file(const std::string& path, const SchemeFile& s, const Config& cfg) {
    if (const auto* vs = std::get_if<VertexScheme>(&s)) {
        const std::size_t entries = vs->class_count() * vs->vertex_count() * vs->vertex_count();
        write_json_file(path, scheme_to_json(*vs), entries > cfg.gzip_threshold_entries);
        return;
    }
    const auto& t = std::get<IntersectionTensor>(s);
    const std::size_t entries = t.lmatrices().size() * t.domain().size() * t.domain().size();
    write_json_file(path, tensor_to_json(t), entries > cfg.gzip_threshold_entries);
}

SchemeFile read_scheme_file(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_object()) throw SchemaError(path + ": top level must be an object");
    const std::string kind = j.value("kind", "");
    if (kind == "vertex") return scheme_from_json(j);
    if (kind == "algebra") return tensor_from_json(j);
    throw SchemaError(path + ": unknown kind '" + kind + "'");
}

Config config_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("config must be an object");
    Config c;
    try {
        for (const auto& [key, val] : j.items()) {
            if (key == "max_vertices") {
                c.max_vertices = val.get<std::size_t>();
            } else if (key == "gzip_threshold_entries") {
                c.gzip_threshold_entries = val.get<std::size_t>();
            } else if (key == "strict_intersection") {
                c.strict_intersection = val.get<bool>();
            } else if (key == "max_search_classes") {
                c.max_search_classes = val.get<std::size_t>();
            } else {
                throw SchemaError("unknown config key '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw SchemaError(std::string("bad config value: ") + e.what());
    }
    return c;
}

Config load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

}  // namespace bivar
