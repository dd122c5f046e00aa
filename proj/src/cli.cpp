#include "pba/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "pba/acceptance.hpp"
#include "pba/json_io.hpp"
#include "pba/mullineux.hpp"
#include "pba/standard_basis.hpp"

namespace pba {

namespace {

void print_blocks_text(const BlockDecomposition& dec, std::ostream& out) {
    out << "n = " << dec.n << ", p = " << dec.p << ", " << dec.provenance << ", " << dec.blocks.size()
        << (dec.blocks.size() == 1 ? " block\n" : " blocks\n");
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        out << "  block " << i + 1 << ":";
        for (const auto& lam : dec.blocks[i]) out << ' ' << lam.str();
        out << "\n";
    }
}

int checked_p(int p) {
    if (p == 2) throw CLI::ValidationError("-p", "characteristic 2 is unsupported");
    if (p != 0 && !is_odd_prime(p)) throw CLI::ValidationError("-p", "p must be 0 or an odd prime");
    return p;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact diagram-algebra engine: blocks, signed composition, partition combinatorics"};
    app.require_subcommand(1);

    int n = 0, p = 0;
    bool as_json = false, use_oracle = false;
    int max_n = 5;
    std::uint64_t seed = 0;
    std::string partition_text, lambda_text;

    auto* blocks = app.add_subcommand("blocks", "block decomposition of the algebra on n strands");
    blocks->add_option("-n", n, "number of strands")->required();
    blocks->add_option("-p", p, "characteristic: 0 or an odd prime")->required();
    blocks->add_flag("--oracle", use_oracle, "compute from central idempotents instead of the closed form");
    blocks->add_flag("--json", as_json, "machine-readable output");
    blocks->add_option("--max-n", max_n, "resource bound for the oracle");

    auto* verify = app.add_subcommand("verify", "run the full verification grid");
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--max-n", max_n, "resource bound for the oracle");

    auto* mult = app.add_subcommand("mult", "compose two diagrams read as JSON from standard input");
    auto* phiv = app.add_subcommand("phi", "anti-automorphism of one diagram read as JSON from standard input");

    auto* pcore = app.add_subcommand("pcore", "p-core of a partition");
    pcore->add_option("-p", p, "p >= 2")->required();
    pcore->add_option("partition", partition_text, "partition, e.g. \"(4,4,2,1)\"")->required();

    auto* mull = app.add_subcommand("mullineux", "conjugate label of the sign-twisted simple module");
    mull->add_option("-p", p, "characteristic: 0 or an odd prime")->required();
    mull->add_option("partition", partition_text, "p-restricted partition")->required();

    auto* dim = app.add_subcommand("dim", "dimension of the algebra on n strands");
    dim->add_option("-n", n, "number of strands")->required();

    auto* gram = app.add_subcommand("gram", "ranks of the standard bilinear forms");
    gram->add_option("-n", n, "number of strands")->required();
    gram->add_option("-p", p, "characteristic: 0 or an odd prime")->required();
    gram->add_option("--lambda", lambda_text, "restrict to one shape");
    gram->add_flag("--json", as_json, "machine-readable output");

    auto* basis = app.add_subcommand("basis-check", "verify the standard family is a triangular basis");
    basis->add_option("-n", n, "number of strands")->required();
    basis->add_option("-p", p, "characteristic: 0 or an odd prime")->required();

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (blocks->parsed()) {
            checked_p(p);
            BlockDecomposition dec;
            if (use_oracle) {
                if (p == 0) {
                    err << "the oracle runs over GF(p) only; use an odd prime\n";
                    return 2;
                }
                OracleOptions oo;
                oo.max_n = max_n;
                dec = block_oracle(n, p, oo);
            } else {
                dec = classify(n, p);
            }
            if (as_json)
                out << to_json(dec).dump(2) << "\n";
            else
                print_blocks_text(dec, out);
            return 0;
        }
        if (verify->parsed()) {
            AcceptanceOptions opt;
            opt.seed = seed;
            opt.oracle_max_n = max_n;
            auto results = run_acceptance(opt);
            bool ok;
            if (as_json) {
                json j = json::array();
                for (const auto& r : results)
                    j.push_back(json{{"criterion", r.id},
                                     {"name", r.name},
                                     {"pass", r.pass},
                                     {"detail", r.detail},
                                     {"seconds", r.seconds}});
                out << j.dump(2) << "\n";
                ok = true;
                for (const auto& r : results) ok = ok && r.pass;
            } else {
                ok = report_acceptance(results, out);
            }
            return ok ? 0 : 1;
        }
        if (mult->parsed()) {
            json j1, j2;
            in >> j1 >> j2;
            Diagram d1 = diagram_from_json(j1), d2 = diagram_from_json(j2);
            out << to_json(compose_signed(d1, d2)).dump(2) << "\n";
            return 0;
        }
        if (phiv->parsed()) {
            json j1;
            in >> j1;
            out << to_json(phi(diagram_from_json(j1))).dump(2) << "\n";
            return 0;
        }
        if (pcore->parsed()) {
            if (p < 2) throw CLI::ValidationError("-p", "pcore needs p >= 2");
            out << p_core(parse_partition(partition_text), p).str() << "\n";
            return 0;
        }
        if (mull->parsed()) {
            checked_p(p);
            out << mullineux(parse_partition(partition_text), p).str() << "\n";
            return 0;
        }
        if (dim->parsed()) {
            if (n < 0 || n > 15) throw CLI::ValidationError("-n", "supported range is 0..15");
            std::uint64_t r = 1;
            for (int k = 2 * n - 1; k > 0; k -= 2) r *= k;
            out << r << "\n";
            return 0;
        }
        if (gram->parsed()) {
            checked_p(p);
            json jout = json::array();
            auto run_for = [&](auto tag, auto kind) {
                using K = decltype(kind);
                StandardBasis<K> sb(n, tag);
                std::vector<Partition> shapes;
                if (lambda_text.empty())
                    shapes = sb.lambdas();
                else
                    shapes.push_back(parse_partition(lambda_text));
                for (const auto& lam : shapes) {
                    int rank = sb.gram_rank(lam);
                    if (as_json)
                        jout.push_back(json{{"lambda", to_json(lam)}, {"rank", rank}});
                    else
                        out << lam.str() << ": rank " << rank << "\n";
                }
            };
            if (p == 0)
                run_for(RatTag{}, Rat{});
            else
                run_for(static_cast<std::uint32_t>(p), Gfp{});
            if (as_json) out << jout.dump(2) << "\n";
            return 0;
        }
        if (basis->parsed()) {
            checked_p(p);
            bool ok = true;
            std::string failure;
            auto run_for = [&](auto tag, auto kind) {
                using K = decltype(kind);
                StandardBasis<K> sb(n, tag);
                for (int gi = 1; gi < n && ok; ++gi)
                    for (const Diagram& gen : {s_generator(n, gi), e_generator(n, gi)})
                        for (int col = 0; col < sb.size() && ok; ++col) {
                            auto coords = sb.coordinates(Element<K>::from_diagram(gen, tag) * sb.element(col));
                            const Partition& lam = sb.lambdas()[sb.label(col).shape];
                            for (int c2 = 0; c2 < sb.size(); ++c2)
                                if (!FieldOps<K>::is_zero(coords[c2]) &&
                                    !dominance_leq(lam, sb.lambdas()[sb.label(c2).shape])) {
                                    ok = false;
                                    failure = "triangularity violated below " + lam.str();
                                }
                        }
            };
            if (p == 0)
                run_for(RatTag{}, Rat{});
            else
                run_for(static_cast<std::uint32_t>(p), Gfp{});
            if (ok) {
                out << "basis of size " << [&] {
                    std::uint64_t r = 1;
                    for (int k = 2 * n - 1; k > 0; k -= 2) r *= k;
                    return r;
                }() << ": OK (invertible and triangular)\n";
                return 0;
            }
            out << "FAILED: " << failure << "\n";
            return 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        err << "resource bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace pba
