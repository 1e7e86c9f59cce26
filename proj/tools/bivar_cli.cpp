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

#include "bivar/bivariate_p.hpp"
#include "bivar/constructors.hpp"
#include "bivar/io.hpp"
#include "bivar/spectra.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <set>

using namespace bivar;

namespace {

constexpr int EXIT_INVALID = 1;
constexpr int EXIT_IO = 2;

struct Params {
    std::map<std::string, std::string> values;
    std::vector<std::string> inputs;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    const std::string& get(const std::string& k) const {
        const auto it = values.find(k);
        if (it == values.end()) throw std::invalid_argument("missing --" + k);
        return it->second;
    }
    long integer(const std::string& k) const {
        const Rational r = rational(k);
        if (!is_integer(r) || !r.get_num().fits_slong_p()) throw std::invalid_argument("--" + k + " must be an integer");
        return r.get_num().get_si();
    }
    Rational rational(const std::string& k) const {
        try {
            return parse_rational(get(k));
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("--" + k + " must be a rational");
        }
    }
};

struct ConstructorSchema {
    std::vector<std::string> params;
    std::size_t inputs = 0;
};

const std::map<std::string, ConstructorSchema>& constructors() {
    static const std::map<std::string, ConstructorSchema> table{
        {"c4", {}},
        {"petersen", {}},
        {"complete", {{"n"}}},
        {"hamming", {{"q"}}},
        {"srg", {{"k", "b", "c"}}},
        {"product", {{}, 2}},
        {"symmetrize", {{"N"}, 1}},
        {"ordered-hamming", {{"q", "N"}}},
        {"nbj", {{"r", "n", "k"}}},
        {"nbj-projection", {{"N", "k"}}},
        {"cell24", {{"s", "l"}}},
        {"symplectic", {{"q", "nu"}}},
        {"attenuated", {{"q", "d", "D", "L"}}},
    };
    return table;
}

void validate(const std::string& name, const Params& p) {
    const auto it = constructors().find(name);
    if (it == constructors().end()) throw std::invalid_argument("unknown constructor '" + name + "'");
    const auto& schema = it->second;
    const std::set<std::string> allowed(schema.params.begin(), schema.params.end());
    for (const auto& [k, v] : p.values)
        if (!allowed.count(k)) throw std::invalid_argument("constructor '" + name + "' takes no --" + k);
    for (const auto& k : schema.params)
        if (!p.has(k)) throw std::invalid_argument("constructor '" + name + "' needs --" + k);
    if (p.inputs.size() != schema.inputs)
        throw std::invalid_argument("constructor '" + name + "' needs " + std::to_string(schema.inputs) + " --in file(s)");
}

VertexScheme vertex_input(const std::string& path) {
    auto f = read_scheme_file(path);
    if (!std::holds_alternative<VertexScheme>(f)) throw std::invalid_argument(path + " is not a vertex-level scheme");
    return std::get<VertexScheme>(std::move(f));
}

int positive(long x, const std::string& k) {
    if (x < 0 || x > 1000000) throw std::invalid_argument("--" + k + " out of range");
    return static_cast<int>(x);
}

SchemeFile build(const std::string& name, const Params& p, const Config& cfg) {
    validate(name, p);
    if (name == "c4") return cycle4();
    if (name == "petersen") return petersen();
    if (name == "complete") {
        const long n = p.integer("n");
        if (n < 1) throw std::invalid_argument("--n must be positive");
        guard_vertices(static_cast<std::size_t>(n), cfg, "complete");
        return complete_scheme(static_cast<std::size_t>(n));
    }
    if (name == "hamming") return hamming2(positive(p.integer("q"), "q"), cfg);
    if (name == "srg") return srg_tensor(SrgParams(p.rational("k"), p.rational("b"), p.rational("c")));
    if (name == "product") return direct_product(vertex_input(p.inputs[0]), vertex_input(p.inputs[1]), {}, {}, cfg);
    if (name == "symmetrize") return symmetrize(vertex_input(p.inputs[0]), positive(p.integer("N"), "N"), cfg);
    if (name == "ordered-hamming") return ordered_hamming(positive(p.integer("q"), "q"), positive(p.integer("N"), "N"), cfg);
    if (name == "nbj")
        return nonbinary_johnson(positive(p.integer("r"), "r"), positive(p.integer("n"), "n"), positive(p.integer("k"), "k"), cfg);
    if (name == "nbj-projection") {
        const int N = positive(p.integer("N"), "N");
        return nbj_projection(ordered_hamming(2, N, cfg), N, positive(p.integer("k"), "k")).scheme;
    }
    if (name == "cell24") return cell24(p.rational("s"), p.rational("l"));
    if (name == "symplectic") return symplectic_d2(p.integer("q"), p.integer("nu"));
    AttenuatedParams ap{p.integer("q"), p.integer("d"), p.integer("D"), p.integer("L")};
    return attenuated_rows(ap);
}

IntersectionTensor tensor_of(const SchemeFile& f, const Config& cfg) {
    if (const auto* vs = std::get_if<VertexScheme>(&f)) return intersection_numbers(*vs, cfg);
    return std::get<IntersectionTensor>(f);
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        write_json_file(out, j, false);
    }
}

json verify(const SchemeFile& f, const std::optional<TypeParams>& tp, bool polys, const Config& cfg, bool& ok) {
    json report{{"schema_version", schema_version}, {"kind", "verify"}};
    ok = true;
    if (const auto* vs = std::get_if<VertexScheme>(&f)) {
        const AxiomReport ax = verify_axioms(*vs);
        report["axioms"] = axioms_to_json(ax);
        if (!ax.passed()) {
            ok = false;
            return report;
        }
    }
    const IntersectionTensor t = tensor_of(f, cfg);
    report["vertex_count"] = t.vertex_count() ? json(t.vertex_count()->get_str()) : json(nullptr);
    if (!tp) return report;
    report["type"] = {{"alpha", tp->alpha().get_str()}, {"beta", tp->beta().get_str()}};
    const MetricVerdict verdict = metric_test(t, *tp);
    report["metric"] = verdict_to_json(verdict);
    ok = verdict.passed;
    if (!polys || !verdict.passed) return report;
    const PolyFamily v = construct_vij(t, *tp);
    report["polynomials"] = polys_to_json(v);
    json eval{{"passed", true}};
    if (const auto* vs = std::get_if<VertexScheme>(&f)) {
        const Matrix X = vs->adjacency({1, 0}), Y = vs->adjacency({0, 1});
        for (const auto& [ij, poly] : v)
            if (poly_eval(poly, X, Y) != vs->adjacency(ij)) {
                eval = {{"passed", false}, {"witness", to_json(ij)}};
                break;
            }
    } else {
        try {
            complete_tensor(t, v);
        } catch (const VerificationFailure& e) {
            eval = {{"passed", false}, {"detail", e.what()}};
        }
    }
    report["evaluation"] = eval;
    ok = eval["passed"].get<bool>();
    return report;
}

json spectra(const VertexScheme& s, bool krein, bool wilson, std::optional<std::size_t> base, const Config& cfg, bool& ok) {
    const IntersectionTensor t = intersection_numbers(s, cfg);
    const Spectrum sp = first_eigenmatrix(t);
    json out = spectrum_to_json(sp);
    out["schema_version"] = schema_version;
    out["kind"] = "spectrum";
    ok = sp.P * sp.Q == Matrix::identity(sp.domain.size()) * sp.vertex_count;
    out["PQ_equals_vI"] = ok;
    if (wilson) {
        const CheckResult w = wilson_check(sp), o = orthogonality_check(sp);
        out["wilson"] = w.passed;
        out["orthogonality"] = o.passed;
        ok = ok && w.passed && o.passed;
    }
    if (!krein && !base) return out;
    const auto idems = idempotents(s, sp);
    const IntersectionTensor kt = krein_parameters(s, sp, idems);
    if (krein) {
        out["krein"] = tensor_to_json(kt);
        const MinimalType mt = minimal_type(kt);
        out["cometric_type"] = minimal_type_to_json(mt);
    }
    if (base) {
        if (*base >= s.vertex_count()) throw std::invalid_argument("--dual-base out of range");
        try {
            dual_adjacency(s, idems, kt, *base);
            out["dual_adjacency"] = {{"base", *base}, {"passed", true}};
        } catch (const VerificationFailure& e) {
            out["dual_adjacency"] = {{"base", *base}, {"passed", false}, {"detail", e.what()}};
            ok = false;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bivariate P-polynomial association schemes"};
    app.require_subcommand(1);
    std::string config_path, out_path;
    app.add_option("--config", config_path, "JSON file with resource guards")->check(CLI::ExistingFile);

    auto* cbuild = app.add_subcommand("build", "Construct a scheme and write it as JSON");
    std::string ctor;
    Params params;
    cbuild->add_option("constructor", ctor, "Constructor name")->required();
    std::map<std::string, std::string> raw;
    for (const char* k : {"q", "N", "r", "n", "k", "b", "c", "s", "l", "nu", "d", "D", "L"})
        cbuild->add_option(std::string("--") + k, raw[k]);
    cbuild->add_option("--in", params.inputs, "Input scheme file(s)");
    cbuild->add_option("-o,--output", out_path, "Output file")->required();

    std::string in_path, alpha = "", beta = "";
    bool polys = false, krein = false, wilson = false;
    std::size_t dual_base = 0;

    auto* cverify = app.add_subcommand("verify", "Check axioms and the (alpha,beta) conditions");
    cverify->add_option("file", in_path)->required();
    cverify->add_option("--alpha", alpha);
    cverify->add_option("--beta", beta);
    cverify->add_flag("--polys", polys, "Also construct v_ij and check the evaluation");
    cverify->add_option("-o,--output", out_path);

    auto* ctype = app.add_subcommand("type", "Minimal (alpha,beta) type");
    ctype->add_option("file", in_path)->required();
    ctype->add_option("-o,--output", out_path);

    auto* cpolys = app.add_subcommand("polys", "Construct the polynomials v_ij");
    cpolys->add_option("file", in_path)->required();
    cpolys->add_option("--alpha", alpha)->required();
    cpolys->add_option("--beta", beta)->required();
    cpolys->add_option("-o,--output", out_path);

    auto* cspec = app.add_subcommand("spectra", "Eigenmatrices, Krein parameters and dual checks");
    cspec->add_option("file", in_path)->required();
    cspec->add_flag("--krein", krein);
    cspec->add_flag("--wilson", wilson);
    auto* base_opt = cspec->add_option("--dual-base", dual_base);
    cspec->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        const Config cfg = config_path.empty() ? Config{} : load_config(config_path);
        auto type_params = [&]() -> std::optional<TypeParams> {
            if (alpha.empty() && beta.empty()) return std::nullopt;
            if (alpha.empty() || beta.empty()) throw std::invalid_argument("--alpha and --beta go together");
            return TypeParams(parse_rational(alpha), parse_rational(beta));
        };
        if (cbuild->parsed()) {
            for (const auto& [k, v] : raw)
                if (cbuild->count(std::string("--") + k)) params.values[k] = v;
            write_scheme_file(out_path, build(ctor, params, cfg), cfg);
            return 0;
        }
        const SchemeFile f = read_scheme_file(in_path);
        bool ok = true;
        if (cverify->parsed()) {
            emit(verify(f, type_params(), polys, cfg, ok), out_path);
            return ok ? 0 : EXIT_INVALID;
        }
        if (ctype->parsed()) {
            json out = minimal_type_to_json(minimal_type(tensor_of(f, cfg)));
            out["schema_version"] = schema_version;
            out["kind"] = "type";
            emit(out, out_path);
            return 0;
        }
        if (cpolys->parsed()) {
            const PolyFamily v = construct_vij(tensor_of(f, cfg), *type_params());
            emit({{"schema_version", schema_version}, {"kind", "polys"}, {"polynomials", polys_to_json(v)}}, out_path);
            return 0;
        }
        if (!std::holds_alternative<VertexScheme>(f)) throw std::invalid_argument("spectra needs a vertex-level scheme");
        std::optional<std::size_t> base;
        if (base_opt->count()) base = dual_base;
        emit(spectra(std::get<VertexScheme>(f), krein, wilson, base, cfg, ok), out_path);
        return ok ? 0 : EXIT_INVALID;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_IO;
    } catch (const NonRationalSpectrum& e) {
        std::cerr << "NonRationalSpectrum: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const NonSeparated& e) {
        std::cerr << "NonSeparated: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const ResourceGuardExceeded& e) {
        std::cerr << "ResourceGuardExceeded: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INVALID;
    }
}
