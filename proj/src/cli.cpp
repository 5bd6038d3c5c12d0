#include "octo/cli.hpp"

#include "octo/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace octo {

namespace {

std::uint64_t seed_from_env() {
    const char* env = std::getenv("OCTO_SEED");
    if (!env || !*env) return 0;
    return std::strtoull(env, nullptr, 10);
}

std::vector<unsigned long> parse_prime_list(const std::string& text) {
    std::vector<unsigned long> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError("--q-primes", "expected a comma-separated prime list");
        out.push_back(std::stoul(token));
    }
    if (out.empty()) throw CLI::ValidationError("--q-primes", "empty prime list");
    return out;
}

LinearMap element_by_name(const FieldSpec& field, const std::string& name) {
    auto parse_pair = [&](const std::string& body) {
        auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("element needs two parameters: " + name);
        return std::pair<Scalar, Scalar>{field.parse_scalar(body.substr(0, comma)),
                                         field.parse_scalar(body.substr(comma + 1))};
    };
    if (name == "s") return s_element(field);
    if (name.rfind("t:", 0) == 0) {
        auto [beta, gamma] = parse_pair(name.substr(2));
        return torus_element(field, beta, gamma);
    }
    if (name.rfind("st:", 0) == 0) {
        auto [beta, gamma] = parse_pair(name.substr(3));
        return compose(s_element(field), torus_element(field, beta, gamma));
    }
    if (name.rfind("sp:", 0) == 0) {
        const std::string body = name.substr(3);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("sp:<p> needs a prime");
        return sp_element(field, std::stoul(body));
    }
    throw std::invalid_argument("unknown element name: " + name +
                                " (expected s, t:<b>,<g>, st:<b>,<g>, sp:<p>)");
}

void emit(std::ostream& out, const Json& j, const std::string& format,
          const std::string& text_rendering) {
    if (format == "text")
        out << text_rendering;
    else
        out << j.dump(2) << "\n";
}

Json fixed_subalgebra_json(const LinearMap& m) {
    SubalgebraBasis d = fixed_subalgebra(m);
    Json j;
    Json basis = Json::array();
    for (const auto& v : d.vectors) basis.push_back(vec_to_json(v));
    j["fixed_basis"] = basis;
    if (d.dim() == 4) {
        QuaternionPresentation pres = quaternion_presentation(d);
        Json pj;
        pj["alpha"] = pres.alpha.to_string();
        pj["beta"] = pres.beta.to_string();
        j["presentation"] = pj;
        j["invariant"] = invariant_to_json(
            quaternion_is_split(pres.alpha, pres.beta, m.field));
    }
    return j;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact split-octonion algebras and involution classification"};
    app.require_subcommand(1);

    std::string field_spec = "Q", format = "json";
    std::string q_primes_text = "3,7,11";
    int probe_samples = 0;

    auto add_common = [&](CLI::App* cmd, bool with_field = true) {
        if (with_field) cmd->add_option("--field", field_spec, "field spec: Q, R, C, Qp:<p>, Fp:<p>");
        cmd->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify involutions over one field");
    std::string out_path;
    add_common(classify_cmd);
    classify_cmd->add_option("--q-primes", q_primes_text,
                             "primes = 3 mod 4 for the rational division classes");
    classify_cmd->add_option("--probe-samples", probe_samples,
                             "fixed-point-group probe samples per class");
    classify_cmd->add_option("--out", out_path, "also write the JSON report to a file");

    // element
    auto* element_cmd = app.add_subcommand("element", "build a named automorphism");
    std::string element_name, show = "order";
    element_cmd->add_option("--name", element_name, "s | t:<b>,<g> | st:<b>,<g> | sp:<p>")
        ->required();
    element_cmd->add_option("--show", show, "matrix | order | fixed-subalgebra")
        ->check(CLI::IsMember({"matrix", "order", "fixed-subalgebra"}));
    add_common(element_cmd);

    // fixed-subalgebra
    auto* fixed_cmd = app.add_subcommand("fixed-subalgebra",
                                         "fixed quaternion subalgebra of an involution");
    std::string fixed_name;
    fixed_cmd->add_option("--name", fixed_name, "s | t:<b>,<g> | st:<b>,<g> | sp:<p>")->required();
    add_common(fixed_cmd);

    // hilbert
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol / quaternion verdict");
    std::string a_text, b_text;
    hilbert_cmd->add_option("--a", a_text)->required();
    hilbert_cmd->add_option("--b", b_text)->required();
    add_common(hilbert_cmd);

    // form
    auto* form_cmd = app.add_subcommand("form", "diagonal quadratic form decisions");
    std::string coeffs_text, decide = "isotropy";
    form_cmd->add_option("--coeffs", coeffs_text, "comma-separated nonzero coefficients")
        ->required();
    form_cmd->add_option("--decide", decide)->check(CLI::IsMember({"isotropy"}));
    add_common(form_cmd);

    // double
    auto* double_cmd = app.add_subcommand("double", "iterate the doubling construction on k*e");
    std::string alphas_text = "1,1,1";
    double_cmd->add_option("--alphas", alphas_text, "doubling parameters, applied in order");
    add_common(double_cmd);

    // verify-paper
    auto* verify_cmd = app.add_subcommand(
        "verify-paper", "classification counts over the full field matrix plus invariant suites");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--q-primes", q_primes_text);
    int verify_probe_samples = 10;
    verify_cmd->add_option("--probe-samples", verify_probe_samples);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (classify_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            ClassifyOptions options;
            options.q_primes = parse_prime_list(q_primes_text);
            options.probe_samples = probe_samples;
            options.seed = seed_from_env();
            ClassificationReport report = classify_field(field, options);
            Json j = classification_to_json(report);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << j.dump(2) << "\n";
            }
            emit(out, j, format, classification_to_text(report));
            return report.all_checks_pass() ? 0 : 1;
        }
        if (element_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            LinearMap m = element_by_name(field, element_name);
            Json j;
            j["schema"] = kSchema;
            j["name"] = element_name;
            j["field"] = field.to_string();
            std::ostringstream text;
            if (show == "matrix") {
                j["matrix"] = mat_to_json(m.matrix);
                text << "matrix of " << element_name << ":\n";
                for (const auto& row : m.matrix) {
                    for (const auto& x : row) text << x.to_string() << " ";
                    text << "\n";
                }
            } else if (show == "order") {
                auto n = order(m);
                if (n)
                    j["order"] = *n;
                else
                    j["order"] = "exceeds cap";
                text << "order: " << (n ? std::to_string(*n) : "exceeds cap") << "\n";
            } else {
                Json fj = fixed_subalgebra_json(m);
                for (auto& [key, value] : fj.items()) j[key] = value;
                text << fj.dump(2) << "\n";
            }
            emit(out, j, format, text.str());
            return 0;
        }
        if (fixed_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            LinearMap m = element_by_name(field, fixed_name);
            Json j;
            j["schema"] = kSchema;
            j["name"] = fixed_name;
            j["field"] = field.to_string();
            Json fj = fixed_subalgebra_json(m);
            for (auto& [key, value] : fj.items()) j[key] = value;
            emit(out, j, format, fj.dump(2) + "\n");
            return 0;
        }
        if (hilbert_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            Json j;
            j["schema"] = kSchema;
            std::ostringstream text;
            if (field.kind() == FieldKind::Rationals) {
                QuaternionInvariant inv = quaternion_is_split(
                    field.parse_scalar(a_text), field.parse_scalar(b_text), field);
                j["verdict"] = inv.split ? "split" : "division";
                Json places = Json::array();
                for (const auto& v : inv.ramified_places)
                    places.push_back(v.infinite ? Json("infinity") : Json(v.p));
                j["ramified_places"] = places;
                text << (inv.split ? "split" : "division") << "\n";
            } else {
                Scalar a = field.parse_scalar(a_text), b = field.parse_scalar(b_text);
                int sym = hilbert_symbol(a, b, field);
                j["symbol"] = sym;
                j["verdict"] = sym == 1 ? "split" : "division";
                text << "symbol: " << sym << "\n";
            }
            emit(out, j, format, text.str());
            return 0;
        }
        if (form_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            std::vector<Scalar> coeffs;
            std::string token;
            std::istringstream is(coeffs_text);
            while (std::getline(is, token, ',')) coeffs.push_back(field.parse_scalar(token));
            DiagonalForm f(coeffs, field);
            IsotropyResult r = is_isotropic(f);
            Json j;
            j["schema"] = kSchema;
            j["field"] = field.to_string();
            j["coeffs"] = vec_to_json(coeffs);
            j["verdict"] = r.isotropic ? "isotropic" : "anisotropic";
            if (r.witness) j["witness"] = vec_to_json(*r.witness);
            emit(out, j, format,
                 std::string(r.isotropic ? "isotropic" : "anisotropic") + "\n");
            return 0;
        }
        if (double_cmd->parsed()) {
            FieldSpec field = FieldSpec::parse(field_spec);
            StructureAlgebra alg = ground_field_algebra(field);
            std::string token;
            std::istringstream is(alphas_text);
            while (std::getline(is, token, ','))
                alg = double_algebra(alg, field.parse_scalar(token));
            Json j;
            j["schema"] = kSchema;
            j["field"] = field.to_string();
            j["algebra"] = structure_to_json(alg);
            j["commutative"] = alg.is_commutative();
            j["associative"] = alg.is_associative();
            j["composition"] = is_composition_algebra(alg).ok;
            emit(out, j, format,
                 "dim " + std::to_string(alg.dim()) + " algebra\n");
            return 0;
        }
        if (verify_cmd->parsed()) {
            ClassifyOptions options;
            options.q_primes = parse_prime_list(q_primes_text);
            options.probe_samples = verify_probe_samples;
            options.seed = seed_from_env();
            VerifyPaperReport report = run_verify_paper(options);
            emit(out, verify_paper_to_json(report), format, verify_paper_to_text(report));
            return report.pass ? 0 : 1;
        }
    } catch (const ClassCountMismatch& ex) {
        err << "classification regression: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace octo
