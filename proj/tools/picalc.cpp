// Command-line front end: codimensions, cocharacters, T-ideal checks,
// classification and table reproduction.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "picalc/catalog.hpp"
#include "picalc/codimension.hpp"
#include "picalc/rep_theory.hpp"
#include "picalc/structure.hpp"
#include "picalc/tables.hpp"

using namespace picalc;
using nlohmann::ordered_json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    std::string mode = "exhaustive";
    std::uint64_t max_tuples = default_max_tuples;
    std::size_t samples = 0;
    bool json = false;
    std::string out;
    std::string nm_unit = "full";
    std::string generators;  // file for sandwich mode
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<MultilinearPolynomial> read_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read generators file " + path);
    std::vector<MultilinearPolynomial> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(MultilinearPolynomial::from_free(parse_polynomial(line)));
    }
    return out;
}

class Runner {
public:
    Runner(Globals g, std::string command_line) : g_(std::move(g)) {
        manifest_.command_line = std::move(command_line);
        manifest_.seed = g_.seed;
        manifest_.mode = g_.mode;
        manifest_.max_tuples = g_.max_tuples;
        manifest_.catalog_version = std::string(catalog_version);
    }

    EngineOptions options() const {
        EngineOptions o;
        o.mode = parse_eval_mode(g_.mode);
        o.seed = g_.seed;
        o.samples = g_.samples;
        o.max_tuples = g_.max_tuples;
        if (!g_.generators.empty()) o.generators = GeneratorSet{g_.generators, read_generators(g_.generators), {}};
        return o;
    }

    Algebra algebra(const std::string& spec) const {
        CatalogOptions co;
        if (g_.nm_unit == "truncated") co.nm_unit = UnitReading::truncated;
        else if (g_.nm_unit != "full") throw std::invalid_argument("--nm-unit must be full or truncated");
        return load_algebra(spec, co);
    }

    void emit(const std::string& csv_body, ordered_json doc) const {
        std::string text;
        if (g_.json) {
            ordered_json full;
            full["manifest"] = {{"command", manifest_.command_line},
                                {"seed", manifest_.seed},
                                {"mode", manifest_.mode},
                                {"max_tuples", manifest_.max_tuples},
                                {"catalog_version", manifest_.catalog_version}};
            for (auto it = doc.begin(); it != doc.end(); ++it) full[it.key()] = it.value();
            text = full.dump(2) + "\n";
        } else {
            text = manifest_.to_comment_lines() + csv_body;
        }
        if (g_.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(g_.out);
            if (!f) throw std::runtime_error("cannot write " + g_.out);
            f << text;
        }
    }

    void catalog_list() const {
        std::string csv = "name,description\n";
        ordered_json arr = ordered_json::array();
        for (const auto& [name, desc] : catalog_entries()) {
            csv += csv_field(name) + "," + csv_field(desc) + "\n";
            arr.push_back({{"name", name}, {"description", desc}});
        }
        emit(csv, {{"algebras", arr}});
    }

    void codim(const std::string& spec, int n_min, int n_max) const {
        const Algebra a = algebra(spec);
        const EngineOptions o = options();
        std::string csv = "algebra,n,c_n,c_n_z,delta_n,plain_certificate,central_certificate\n";
        ordered_json rows = ordered_json::array();
        for (int n = n_min; n <= n_max; ++n) {
            const IdentitySpace plain = certified_identity_space(a, n, IdentityKind::plain, o);
            const IdentitySpace central = certified_identity_space(a, n, IdentityKind::central, o);
            const std::size_t delta = plain.codimension() - central.codimension();
            csv += csv_field(a.name()) + "," + std::to_string(n) + "," + std::to_string(plain.codimension()) + "," +
                   std::to_string(central.codimension()) + "," + std::to_string(delta) + "," +
                   csv_field(plain.certificate.to_string()) + "," + csv_field(central.certificate.to_string()) + "\n";
            rows.push_back({{"n", n},
                            {"c_n", plain.codimension()},
                            {"c_n_z", central.codimension()},
                            {"delta_n", delta},
                            {"plain_certificate", plain.certificate.to_string()},
                            {"central_certificate", central.certificate.to_string()}});
        }
        emit(csv, {{"algebra", a.name()}, {"rows", rows}});
    }

    CocharacterDecomposition decomposition(const Algebra& a, int n, CocharVariant variant,
                                           std::string& certificate) const {
        const EngineOptions o = options();
        const IdentitySpace plain = certified_identity_space(a, n, IdentityKind::plain, o);
        const bool allow = o.mode == EvalMode::randomized;
        if (!plain.certificate.exact() && !allow) throw UncertifiedSpaceError("exact traces need an exact space");
        ModuleCharacter chi = quotient_character(plain);
        certificate = plain.certificate.to_string();
        if (variant != CocharVariant::plain) {
            const IdentitySpace central = certified_identity_space(a, n, IdentityKind::central, o);
            const ModuleCharacter chi_z = quotient_character(central);
            certificate += "/" + central.certificate.to_string();
            if (variant == CocharVariant::central) chi = chi_z;
            else
                for (auto& [rho, t] : chi) t -= chi_z.at(rho);
        }
        return decompose(chi, n, variant);
    }

    void cochar(const std::string& spec, int n, const std::string& variant_text) const {
        const Algebra a = algebra(spec);
        const CocharVariant variant = parse_cochar_variant(variant_text);
        std::string cert;
        const auto d = decomposition(a, n, variant, cert);
        std::string csv = "algebra,n,variant,partition,multiplicity,certificate\n";
        ordered_json mults = ordered_json::array();
        for (const auto& [lambda, m] : d.mults) {
            csv += csv_field(a.name()) + "," + std::to_string(n) + "," + to_string(variant) + "," +
                   csv_field("(" + lambda.to_string() + ")") + "," + std::to_string(m) + "," + csv_field(cert) + "\n";
            mults.push_back({{"partition", lambda.to_string()}, {"multiplicity", m}});
        }
        emit(csv, {{"algebra", a.name()},
                   {"n", n},
                   {"variant", to_string(variant)},
                   {"character", d.to_string()},
                   {"colength", d.colength()},
                   {"certificate", cert},
                   {"multiplicities", mults}});
    }

    void colength_cmd(const std::string& spec, int n_min, int n_max, const std::string& variant_text) const {
        const Algebra a = algebra(spec);
        const CocharVariant variant = parse_cochar_variant(variant_text);
        std::string csv = "algebra,n,variant,colength,character,certificate\n";
        ordered_json rows = ordered_json::array();
        for (int n = n_min; n <= n_max; ++n) {
            std::string cert;
            const auto d = decomposition(a, n, variant, cert);
            csv += csv_field(a.name()) + "," + std::to_string(n) + "," + to_string(variant) + "," +
                   std::to_string(d.colength()) + "," + csv_field(d.to_string()) + "," + csv_field(cert) + "\n";
            rows.push_back({{"n", n}, {"colength", d.colength()}, {"character", d.to_string()}, {"certificate", cert}});
        }
        emit(csv, {{"algebra", a.name()}, {"variant", to_string(variant)}, {"rows", rows}});
    }

    void verify(const std::string& spec, const std::string& gens_file, int n_min, int n_max) const {
        const Algebra a = algebra(spec);
        const auto gens = read_generators(gens_file);
        const auto verdicts = verify_tideal(a, gens, n_min, n_max, options(), gens_file);
        std::string csv = "algebra,n,verdict,c_n,lower_dim,upper_dim,certificate,detail\n";
        ordered_json rows = ordered_json::array();
        for (const auto& v : verdicts) {
            const std::string verdict = v.certified_equal ? "certified-equal" : "gap";
            csv += csv_field(a.name()) + "," + std::to_string(v.n) + "," + verdict + "," +
                   (v.certified_equal ? std::to_string(v.codimension) : "") + "," + std::to_string(v.lower) + "," +
                   std::to_string(v.upper) + "," + csv_field(v.certificate.to_string()) + "," + csv_field(v.detail) +
                   "\n";
            ordered_json row = {{"n", v.n},
                                {"verdict", verdict},
                                {"lower_dim", v.lower},
                                {"upper_dim", v.upper},
                                {"certificate", v.certificate.to_string()}};
            if (v.certified_equal) row["c_n"] = v.codimension;
            if (!v.detail.empty()) row["detail"] = v.detail;
            rows.push_back(row);
        }
        emit(csv, {{"algebra", a.name()}, {"rows", rows}});
    }

    void classify_cmd(const std::string& spec, const std::string& target_text, int max_n) const {
        const Algebra a = algebra(spec);
        const auto rep = classify(a, parse_classification_target(target_text), max_n, options());
        std::string csv = "# verdict: " + rep.verdict + "\n";
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
            return s;
        };
        csv += "# candidate_classes: " + join(rep.candidate_classes) + "\n";
        csv += "# matching_classes: " + join(rep.matching_classes) + "\n";
        csv += "algebra,status,degree,witness\n";
        ordered_json results = ordered_json::array();
        for (const auto& r : rep.results) {
            const std::string w = r.result.witness ? to_string(*r.result.witness) : "";
            csv += csv_field(r.algebra) + "," + r.status() + "," + std::to_string(r.result.degree) + "," +
                   csv_field(w) + "\n";
            ordered_json checks = ordered_json::array();
            for (const auto& c : r.result.checks)
                checks.push_back({{"n", c.n},
                                  {"answer", to_string(c.answer)},
                                  {"algebra_certificate", c.a_certificate.to_string()},
                                  {"member_certificate", c.q_certificate.to_string()}});
            ordered_json item = {{"algebra", r.algebra}, {"status", r.status()}, {"degree", r.result.degree}};
            if (r.result.witness) item["witness"] = w;
            item["checks"] = checks;
            results.push_back(item);
        }
        emit(csv, {{"algebra", a.name()},
                   {"target", to_string(rep.target)},
                   {"certificate_degree", rep.certificate_degree},
                   {"verdict", rep.verdict},
                   {"candidate_classes", rep.candidate_classes},
                   {"matching_classes", rep.matching_classes},
                   {"not_excluded", rep.not_excluded},
                   {"results", results}});
    }

    void table(const std::string& lemma, int n_min, int n_max) const {
        if (lemma == "list") {
            std::string csv = "lemma,description\n";
            ordered_json arr = ordered_json::array();
            for (const auto& l : lemma_ids()) {
                csv += csv_field(l.id) + "," + csv_field(l.description) + "\n";
                arr.push_back({{"lemma", l.id}, {"description", l.description}});
            }
            emit(csv, {{"lemmas", arr}});
            return;
        }
        const Table t = run_table(lemma, n_min, n_max, options());
        if (g_.json) {
            auto doc = ordered_json::parse(to_json(t, manifest_));
            doc.erase("manifest");
            emit("", doc);
        } else {
            emit(to_csv(t), {});
        }
    }

private:
    Globals g_;
    RunManifest manifest_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial identities of finite-dimensional algebras: codimensions, cocharacters, classification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized evaluation")->capture_default_str();
    app.add_option("--mode", g.mode, "exhaustive, randomized or sandwich")
        ->check(CLI::IsMember({"exhaustive", "randomized", "sandwich"}))
        ->capture_default_str();
    app.add_option("--max-tuples", g.max_tuples, "Ceiling on exhaustive tuple evaluations")->capture_default_str();
    app.add_option("--samples", g.samples, "Random tuples per degree (0: max(4 n!, 256))");
    app.add_flag("--json", g.json, "JSON output instead of CSV");
    app.add_option("--out", g.out, "Write output to this path");
    app.add_option("--nm-unit", g.nm_unit, "Reading of I_m in N_m: full or truncated")->capture_default_str();
    app.add_option("--generators", g.generators, "Generator file for sandwich mode (one polynomial per line)");

    std::string alg, gens_file, variant = "plain", target = "l6", lemma;
    int n = 5, n_min = 1, n_max = 5, max_n = 5;

    auto* cat = app.add_subcommand("catalog", "Catalog of named algebras");
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    cat->require_subcommand(1);

    auto* codim = app.add_subcommand("codim", "Codimensions c_n, c_n^z, delta_n");
    codim->add_option("algebra", alg, "Algebra file or expression")->required();
    codim->add_option("--n-min", n_min)->capture_default_str();
    codim->add_option("--n-max", n_max)->capture_default_str();

    auto* cochar = app.add_subcommand("cochar", "Cocharacter multiplicities");
    cochar->add_option("algebra", alg, "Algebra file or expression")->required();
    cochar->add_option("--n", n)->capture_default_str();
    cochar->add_option("--variant", variant, "plain, central or proper")->capture_default_str();

    auto* col = app.add_subcommand("colength", "Colengths");
    col->add_option("algebra", alg, "Algebra file or expression")->required();
    col->add_option("--n-min", n_min)->capture_default_str();
    col->add_option("--n-max", n_max)->capture_default_str();
    col->add_option("--variant", variant, "plain, central or proper")->capture_default_str();

    auto* vt = app.add_subcommand("verify-tideal", "Sandwich check of a generating set");
    vt->add_option("algebra", alg, "Algebra file or expression")->required();
    vt->add_option("generators", gens_file, "File with one polynomial per line")->required()->check(CLI::ExistingFile);
    vt->add_option("--n-min", n_min)->capture_default_str();
    vt->add_option("--n-max", n_max)->capture_default_str();

    auto* cls = app.add_subcommand("classify", "Exclusion checks against the classification sets");
    cls->add_option("algebra", alg, "Algebra file or expression")->required();
    cls->add_option("--target", target, "l6, l7 or lz2")->capture_default_str();
    cls->add_option("--max-n", max_n)->capture_default_str();

    auto* tab = app.add_subcommand("table", "Recompute a lemma's claims (use 'list' for ids)");
    tab->add_option("lemma", lemma, "Lemma id or 'list'")->required();
    tab->add_option("--n-min", n_min)->capture_default_str();
    tab->add_option("--n-max", n_max)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    std::string command_line;
    for (int i = 1; i < argc; ++i) command_line += (i > 1 ? " " : "") + std::string(argv[i]);

    try {
        if (n < 1 || n_min < 1 || n_max < n_min || max_n < 1) throw std::invalid_argument("bad degree range");
        Runner run(g, command_line);
        if (cat_list->parsed()) run.catalog_list();
        else if (codim->parsed()) run.codim(alg, n_min, n_max);
        else if (cochar->parsed()) run.cochar(alg, n, variant);
        else if (col->parsed()) run.colength_cmd(alg, n_min, n_max, variant);
        else if (vt->parsed()) run.verify(alg, gens_file, n_min, n_max);
        else if (cls->parsed()) run.classify_cmd(alg, target, max_n);
        else if (tab->parsed()) run.table(lemma, n_min, n_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
