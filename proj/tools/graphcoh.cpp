// graphcoh command-line tool.
//
// Exit codes: 0 success, 1 failed assertion, 2 usage or input error,
// 3 resource guard tripped.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcoh/algebra.hpp"
#include "graphcoh/cocycles.hpp"
#include "graphcoh/cohomology.hpp"
#include "graphcoh/complex.hpp"
#include "graphcoh/graph_io.hpp"
#include "graphcoh/verify.hpp"
#include "graphcoh/version.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace graphcoh;

constexpr int exit_ok = 0;
constexpr int exit_assertion = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;

struct Common {
    std::uint64_t max_raw_graphs = 0;
    std::uint64_t max_matrix_dim = 0;

    Limits limits() const
    {
        Limits l = Limits::from_environment();
        if (max_raw_graphs) l.max_raw_graphs = max_raw_graphs;
        if (max_matrix_dim) l.max_matrix_dim = max_matrix_dim;
        return l;
    }
};

json meta()
{
    json j;
    j["version"] = std::string(version());
    j["sign_convention_hash"] = sign_convention_hash();
    return j;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
}

Chain read_chain(const std::string& path) { return to_chain(parse_chain_document(read_file(path))); }

std::string header_comment()
{
    return "# graphcoh " + std::string(version()) + " conventions " + sign_convention_hash() + "\n";
}

void add_kind_options(CLI::App* cmd, std::string& backbone, std::string& parity)
{
    cmd->add_option("--backbone", backbone, "circle or line")->required()->check(CLI::IsMember({"circle", "line"}));
    cmd->add_option("--parity", parity, "odd or even")->required()->check(CLI::IsMember({"odd", "even"}));
}

json results_json(const std::vector<AxiomResult>& results, bool& all_ok)
{
    json list = json::array();
    all_ok = true;
    for (const AxiomResult& r : results) {
        json item;
        item["name"] = r.name;
        item["checked"] = r.checked;
        item["passed"] = r.passed;
        item["ok"] = r.ok();
        if (!r.ok()) item["witness"] = r.witness;
        all_ok = all_ok && r.ok();
        list.push_back(item);
    }
    return list;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decorated graph complexes: bases, coboundary, Hopf operations and cohomology"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version()));
    Common common;
    app.add_option("--max-raw-graphs", common.max_raw_graphs, "raw graph budget per enumeration (0: default)");
    app.add_option("--max-matrix-dim", common.max_matrix_dim, "largest admissible matrix dimension (0: default)");

    // basis
    std::string backbone, parity;
    int k = 0, m = 0;
    std::string format = "text";
    auto* basis_cmd = app.add_subcommand("basis", "list the canonical basis of D^{k,m} or L^{k,m}");
    add_kind_options(basis_cmd, backbone, parity);
    basis_cmd->add_option("--k", k, "order")->required()->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--m", m, "degree")->required()->check(CLI::NonNegativeNumber);
    basis_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // delta
    std::string input, output;
    bool check_square = false;
    auto* delta_cmd = app.add_subcommand("delta", "apply the coboundary to a chain file");
    delta_cmd->add_option("--input,-i", input, "chain file")->required();
    delta_cmd->add_option("--output,-o", output, "output chain file (default stdout)");
    delta_cmd->add_flag("--check-square", check_square, "also assert that delta(delta(c)) = 0");

    // product
    std::string left, right;
    auto* product_cmd = app.add_subcommand("product", "shuffle product of two chain files");
    product_cmd->add_option("--left", left, "left chain file")->required();
    product_cmd->add_option("--right", right, "right chain file")->required();
    product_cmd->add_option("--output,-o", output, "output chain file (default stdout)");

    // coproduct
    bool verify_hopf = false;
    int kmax = 3;
    auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of a line chain file");
    coproduct_cmd->add_option("--input,-i", input, "chain file (required unless --verify-hopf)");
    coproduct_cmd->add_option("--output,-o", output, "output tensor chain file (default stdout)");
    coproduct_cmd->add_flag("--verify-hopf", verify_hopf, "run the Hopf axiom battery and emit a JSON report");
    std::string report_path;
    coproduct_cmd->add_option("--report", report_path, "file for the --verify-hopf report (default stdout)");
    coproduct_cmd->add_option("--kmax", kmax, "largest order for --verify-hopf")->check(CLI::NonNegativeNumber);

    // antipode
    auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a line chain file");
    antipode_cmd->add_option("--input,-i", input, "chain file")->required();
    antipode_cmd->add_option("--output,-o", output, "output chain file (default stdout)");

    // cohomology-table
    int mmax = 2;
    std::string json_path, matrix_dir;
    std::uint64_t seed = default_seed;
    auto* table_cmd = app.add_subcommand("cohomology-table", "dimensions of H^{k,m} for k <= kmax, m <= mmax");
    add_kind_options(table_cmd, backbone, parity);
    table_cmd->add_option("--kmax", kmax, "largest order")->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--mmax", mmax, "largest degree")->required()->check(CLI::NonNegativeNumber);
    table_cmd->add_option("--json", json_path, "also write a JSON report to this file");
    table_cmd->add_option("--emit-matrix", matrix_dir, "write every delta matrix as a triplet file into this directory");
    auto* seed_opt = table_cmd->add_option("--seed", seed, "enumerate in a shuffled order");

    // prop4
    int lmax = 2;
    bool prop4_json = false;
    std::string dump_dir;
    auto* prop4_cmd = app.add_subcommand("prop4", "check closedness and nontriviality of the powers of Psi");
    prop4_cmd->add_option("--lmax", lmax, "largest power")->required()->check(CLI::PositiveNumber);
    prop4_cmd->add_flag("--json", prop4_json, "emit the report as JSON");
    prop4_cmd->add_option("--dump-chain", dump_dir, "write psi_power_<l>.chain files into this directory");

    // verify-axioms
    auto* verify_cmd = app.add_subcommand("verify-axioms", "run the full algebraic law battery");
    verify_cmd->add_option("--kmax", kmax, "largest total order")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");
    verify_cmd->add_option("--output,-o", output, "report file (default stdout)");

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering of a graph file");
    dot_cmd->add_option("--input,-i", input, "graph file")->required();
    dot_cmd->add_option("--output,-o", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        EnumerationOptions enumeration;
        enumeration.limits = common.limits();

        if (basis_cmd->parsed()) {
            const GradedBasis basis = enumerate_basis(parse_backbone(backbone), parse_parity(parity), k, m, enumeration);
            if (format == "json") {
                json j = meta();
                j["backbone"] = backbone;
                j["parity"] = parity;
                j["k"] = k;
                j["m"] = m;
                j["count"] = basis.size();
                j["raw_graphs"] = basis.raw_count;
                j["graphs"] = json::array();
                for (const CanonicalGraph& g : basis.graphs) j["graphs"].push_back(serialize(g));
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << header_comment() << "# " << backbone << ' ' << parity << " k=" << k << " m=" << m
                          << " count=" << basis.size() << '\n';
                for (std::size_t i = 0; i < basis.size(); ++i)
                    std::cout << "graph b" << i + 1 << '\n' << serialize(basis.graphs[i]) << "end\n";
            }
        } else if (delta_cmd->parsed()) {
            const Chain c = read_chain(input);
            const Chain d = delta(c);
            write_output(output, write_chain(d));
            if (check_square) {
                const Chain dd = delta(d);
                if (!dd.is_zero()) {
                    std::cerr << "delta_squared violated; witness:\n" << write_chain(dd);
                    return exit_assertion;
                }
                std::cerr << "delta_squared: ok\n";
            }
        } else if (product_cmd->parsed()) {
            write_output(output, write_chain(shuffle_product(read_chain(left), read_chain(right))));
        } else if (coproduct_cmd->parsed()) {
            if (!verify_hopf && input.empty()) throw CLI::RequiredError("--input");
            if (!input.empty()) write_output(output, write_tensor_chain(coproduct(read_chain(input))));
            if (verify_hopf) {
                std::vector<AxiomResult> results;
                for (Parity p : {Parity::odd, Parity::even}) {
                    results.push_back(check_coassociativity(p, kmax, 3, enumeration));
                    results.push_back(check_counit(p, kmax, 3, enumeration));
                    results.push_back(check_compatibility(p, kmax, 2, enumeration));
                    results.push_back(check_coproduct_delta(p, kmax, 3, enumeration));
                    results.push_back(check_antipode_left(p, kmax, 3, enumeration));
                    results.push_back(check_antipode_right(p, kmax, 3, enumeration));
                }
                bool ok = true;
                json j = meta();
                j["kmax"] = kmax;
                j["axioms"] = results_json(results, ok);
                j["ok"] = ok;
                write_output(report_path, j.dump(2) + "\n");
                if (!ok) return exit_assertion;
            }
        } else if (antipode_cmd->parsed()) {
            write_output(output, write_chain(antipode(read_chain(input))));
        } else if (table_cmd->parsed()) {
            if (seed_opt->count() > 0) enumeration.seed = seed;
            const Backbone b = parse_backbone(backbone);
            const Parity p = parse_parity(parity);
            const std::vector<CohomologyEntry> table = cohomology_table(b, p, kmax, mmax, enumeration);
            std::cout << header_comment() << "k\tm\tchains\trank_out\trank_in\tdim\n";
            for (const CohomologyEntry& e : table)
                std::cout << e.k << '\t' << e.m << '\t' << e.chains << '\t' << e.rank_out << '\t' << e.rank_in << '\t'
                          << e.dim << '\n';
            if (!json_path.empty()) {
                json j = meta();
                j["backbone"] = backbone;
                j["parity"] = parity;
                j["kmax"] = kmax;
                j["mmax"] = mmax;
                j["entries"] = json::array();
                for (const CohomologyEntry& e : table)
                    j["entries"].push_back({{"k", e.k}, {"m", e.m}, {"chains", e.chains}, {"rank_out", e.rank_out},
                                            {"rank_in", e.rank_in}, {"dim", e.dim}});
                write_output(json_path, j.dump(2) + "\n");
            }
            if (!matrix_dir.empty()) {
                std::filesystem::create_directories(matrix_dir);
                for (int kk = 0; kk <= kmax; ++kk)
                    for (int mm = 0; mm <= mmax; ++mm) {
                        const SparseExactMatrix mat = delta_matrix(enumerate_basis(b, p, kk, mm, enumeration),
                                                                   enumerate_basis(b, p, kk, mm + 1, enumeration),
                                                                   enumeration.limits);
                        std::ofstream out(std::filesystem::path(matrix_dir) /
                                          ("delta_k" + std::to_string(kk) + "_m" + std::to_string(mm) + ".txt"));
                        mat.write_triplets(out);
                    }
            }
        } else if (prop4_cmd->parsed()) {
            const Prop4Report report = prop4_report(lmax, false);
            bool ok = true;
            for (const Prop4Entry& e : report.entries) ok = ok && e.nontrivial();
            if (!dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                for (std::size_t i = 0; i < report.powers.size(); ++i)
                    write_output((std::filesystem::path(dump_dir) / ("psi_power_" + std::to_string(i + 1) + ".chain")).string(),
                                 write_chain(report.powers[i]));
            }
            if (prop4_json) {
                json j = meta();
                j["lmax"] = lmax;
                j["levels"] = json::array();
                for (const Prop4Entry& e : report.entries)
                    j["levels"].push_back({{"l", e.l},
                                           {"closed", e.closed},
                                           {"gamma_coefficient", e.coefficient.get_str()},
                                           {"terms", e.terms},
                                           {"contributing_shuffles", e.contributing_shuffles},
                                           {"contributing_patterns", e.contributing_patterns},
                                           {"contributions_same_sign", e.contributions_same_sign},
                                           {"only_tripod_provenance", e.only_tripod_provenance},
                                           {"tripod_product_coefficient", e.tripod_product_coefficient.get_str()},
                                           {"no_lower_degree", e.no_lower_degree},
                                           {"nontrivial", e.nontrivial()}});
                j["ok"] = ok;
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << header_comment();
                for (const Prop4Entry& e : report.entries)
                    std::cout << "l=" << e.l << " closed=" << (e.closed ? "yes" : "no")
                              << " coefficient(Gamma_l)=" << e.coefficient.get_str() << " terms=" << e.terms
                              << " contributions=" << e.contributing_patterns << " (raw shuffles "
                              << e.contributing_shuffles << ", same sign " << (e.contributions_same_sign ? "yes" : "no")
                              << ") nontrivial=" << (e.nontrivial() ? "yes" : "no") << '\n';
            }
            if (!ok) return exit_assertion;
        } else if (verify_cmd->parsed()) {
            VerifyOptions options;
            options.kmax = kmax;
            options.seed = seed;
            options.enumeration = enumeration;
            bool ok = true;
            json j = meta();
            j["kmax"] = kmax;
            j["seed"] = seed;
            j["axioms"] = results_json(verify_axioms(options), ok);
            j["ok"] = ok;
            write_output(output, j.dump(2) + "\n");
            if (!ok) return exit_assertion;
        } else if (dot_cmd->parsed()) {
            const SignedGraph g = canonicalize(parse_graph(read_file(input)));
            if (g.is_zero()) throw ValidationError("the graph reduces to zero by its symmetry relations");
            write_output(output, to_dot(g.graph()));
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return exit_resource;
    } catch (const NontrivialityViolation& e) {
        std::cerr << "nontriviality violation: " << e.what() << '\n';
        return exit_assertion;
    } catch (const BasisIncompleteError& e) {
        std::cerr << "basis incomplete: " << e.what() << '\n';
        return exit_assertion;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_assertion;
    }
    return exit_ok;
}
