#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockcas/classify.hpp"
#include "fockcas/element_io.hpp"
#include "fockcas/identities.hpp"
#include "fockcas/modules.hpp"
#include "fockcas/series.hpp"
#include "fockcas/vertex.hpp"

namespace {

using namespace fockcas;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

// Element arguments accept the grammar plus the named constants.
FockVector element_arg(const std::string& text, std::optional<Sector> expect = std::nullopt,
                       std::string_view symbol = "vac") {
    if (text == "omega" || text == "jay" || text == "vac") {
        return generator(text);
    }
    return parse_element(text, expect, symbol);
}

std::vector<Rational> rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(Rational::from_string(item));
    }
    if (out.empty()) throw ParseError("empty list: '" + csv + "'");
    return out;
}

void print_terms_structured(const FockVector& v, std::string_view symbol) {
    for (const auto& [mono, coeff] : v.terms()) {
        std::cout << coeff.numerator().get_str() << "\t" << coeff.denominator().get_str() << "\t"
                  << format_monomial(mono, symbol) << "\n";
    }
}

Sector sector_arg(const std::string& name) {
    if (name == "untwisted") return Sector::Untwisted;
    if (name == "twisted") return Sector::Twisted;
    throw ParseError("sector must be 'untwisted' or 'twisted', got '" + name + "'");
}

// ---- verification battery -------------------------------------------------

RelationReport report_from_bool(const std::string& name, bool pass, const std::string& detail) {
    RelationReport rep;
    rep.name = name;
    rep.pass = pass;
    rep.detail = detail;
    if (!pass) {
        FockVector marker(Sector::Untwisted);
        marker.add_term(Monomial(), Rational(1));
        rep.residual = marker;
    }
    return rep;
}

RelationReport verify_central_charge() {
    Rational c = central_charge();
    return report_from_bool("central-charge", c == Rational(1),
                            "2 * vac-coefficient of omega_3 omega = " + c.str());
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rational(num(rng), den(rng));
}

RelationReport verify_determinant_battery() {
    std::mt19937 rng(20240917);
    bool all = true;
    std::string detail;
    for (long n = 0; n <= 2; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<Rational> xs, ys;
            while (static_cast<long>(xs.size()) < n + 1) {
                Rational c = random_rational(rng);
                bool dup = false;
                for (const auto& x : xs) dup = dup || x == c;
                if (!dup) xs.push_back(c);
            }
            while (static_cast<long>(ys.size()) < n + 1) {
                Rational c = random_rational(rng);
                bool dup = false;
                for (const auto& y : ys) dup = dup || y == c;
                if (!dup) ys.push_back(c);
            }
            auto r = verify_determinant_lemma(n, xs, ys);
            all = all && r.pass;
            if (!r.pass) detail += r.detail + "; ";
        }
    }
    return report_from_bool("determinant", all,
                            all ? "closed form matches Bareiss for n = 0,1,2 at 5 point sets each"
                                : detail);
}

RelationReport verify_borcherds_battery(int count) {
    std::mt19937 rng(913276);
    std::uniform_int_distribution<long> mode(-3, 3);
    std::uniform_int_distribution<long> weight(0, 5);
    auto random_element = [&]() {
        FockVector v(Sector::Untwisted);
        int terms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < terms; ++t) {
            long w = weight(rng);
            Monomial m;
            while (w > 0) {
                std::uniform_int_distribution<long> part(1, w);
                long p = part(rng);
                m = m.with_part(HalfInt::whole(p));
                w -= p;
            }
            Rational c = random_rational(rng);
            if (c.is_zero()) c = Rational(1);
            v.add_term(m, c);
        }
        return v;
    };
    bool all = true;
    std::string detail;
    for (int t = 0; t < count; ++t) {
        FockVector u = random_element(), v = random_element(), w = random_element();
        long p = mode(rng), q = mode(rng), r = mode(rng);
        if (!verify_borcherds(u, v, w, p, q, r)) {
            all = false;
            detail += "failed at (p,q,r)=(" + std::to_string(p) + "," + std::to_string(q) + "," +
                      std::to_string(r) + "); ";
        }
    }
    return report_from_bool("borcherds", all,
                            all ? std::to_string(count) + " randomized triples of weight <= 5, "
                                  "p,q,r in [-3,3]"
                                : detail);
}

RelationReport verify_whittaker_battery() {
    bool all = true;
    std::string detail;
    auto check = [&](bool ok, const std::string& what) {
        all = all && ok;
        if (!ok) detail += what + "; ";
    };

    FockVector om = virasoro(), J = jay();

    // untwisted zeta = (0,2): s = 3, lambda = (0, 2)
    WhittakerParams uz(Sector::Untwisted, {Rational(0), Rational(2)});
    ModuleVector u = ModuleVector::cyclic(uz);
    auto scalar = [](const ModuleVector& m, const Rational& c, const ModuleVector& base) {
        ModuleVector want{base.params, c * base.vec};
        return m == want;
    };
    check(scalar(module_mode_action(om, HalfInt::whole(2), u), Rational(0), u), "omega_2 u != 0");
    check(scalar(module_mode_action(om, HalfInt::whole(3), u), Rational(2), u), "omega_3 u != 2u");
    for (long long i = 4; i <= 8; ++i) {
        check(module_mode_action(om, HalfInt::whole(i), u).vec.is_zero(),
              "omega_" + std::to_string(i) + " u != 0");
    }
    check(scalar(module_mode_action(J, HalfInt::whole(7), u), Rational(16), u), "J_7 u != 16u");
    for (long long i = 8; i <= 11; ++i) {
        check(module_mode_action(J, HalfInt::whole(i), u).vec.is_zero(),
              "J_" + std::to_string(i) + " u != 0");
    }

    // twisted zeta = (1): s = 2, lambda = (1/2)
    WhittakerParams tz(Sector::Twisted, {Rational(1)});
    ModuleVector w = ModuleVector::cyclic(tz);
    check(scalar(module_mode_action(om, HalfInt::whole(2), w), Rational(1, 2), w),
          "twisted omega_2 u != (1/2)u");
    check(scalar(module_mode_action(J, HalfInt::whole(5), w), Rational(1), w),
          "twisted J_5 u != u");

    // twisted vacuum module: ground state conformal weight 1/16
    WhittakerParams tv(Sector::Twisted, {Rational(0)});
    ModuleVector v0 = ModuleVector::cyclic(tv);
    check(scalar(module_mode_action(om, HalfInt::whole(1), v0), Rational(1, 16), v0),
          "twisted omega_1 u != (1/16)u");

    return report_from_bool("whittaker", all,
                            all ? "eigenvalues on M(1,(0,2)), M(1,(1))(theta) and M(1,(0))(theta)"
                                : detail);
}

RelationReport verify_oj_battery() {
    WhittakerParams uz(Sector::Untwisted, {Rational(0), Rational(2)});
    ModuleVector u = ModuleVector::cyclic(uz);
    FockVector om = virasoro(), J = jay();
    const long long s = 3;
    bool all = true;
    std::string detail;
    for (long long p1 = 1; p1 <= 3; ++p1) {
        for (long long p2 = 1; p2 <= 3; ++p2) {
            FockVector elt = mode_chain({{om, -p1}, {J, -p2}});
            long long base = p1 + p2 + 2;
            for (long long n = base; n < base + 6; ++n) {
                ModuleVector lhs = module_mode_action(elt, HalfInt::whole(n), u);
                // iterate formula: sum of binomial-weighted compositions
                FockVector rhs(Sector::Untwisted);
                ModuleVector acc{uz, rhs};
                const long long N = n + 1 - p1 - p2;
                for (long long i = N - (2 * s + 1); i <= -1; ++i) {
                    long long j = N - i;
                    Rational c = binomial(-i - 1, p1 - 1) * binomial(-j - 1, p2 - 1);
                    if (c.is_zero()) continue;
                    ModuleVector inner = module_mode_action(J, HalfInt::whole(j), u);
                    ModuleVector outer = module_mode_action(om, HalfInt::whole(i), inner);
                    acc.vec += c * outer.vec;
                }
                for (long long i = 0; i <= s; ++i) {
                    long long j = N - i;
                    Rational c = binomial(-i - 1, p1 - 1) * binomial(-j - 1, p2 - 1);
                    if (c.is_zero()) continue;
                    ModuleVector inner = module_mode_action(om, HalfInt::whole(i), u);
                    ModuleVector outer = module_mode_action(J, HalfInt::whole(j), inner);
                    acc.vec += c * outer.vec;
                }
                if (!(lhs.vec == acc.vec)) {
                    all = false;
                    detail += "(p1,p2,n)=(" + std::to_string(p1) + "," + std::to_string(p2) + "," +
                              std::to_string(n) + "); ";
                }
            }
        }
    }
    return report_from_bool("oj-expansion", all,
                            all ? "(omega_{-p1} J_{-p2} vac)_n matches the two-sided mode "
                                  "composition on M(1,(0,2))"
                                : detail);
}

std::vector<RelationReport> run_battery(const std::string& only) {
    std::vector<RelationReport> out;
    auto want = [&](const std::string& name) { return only.empty() || only == name; };
    if (want("P9")) out.push_back(assemble_relation("P9"));
    if (want("P10")) out.push_back(assemble_relation("P10"));
    if (want("lie-oj")) out.push_back(verify_lie_oj());
    if (want("jj-commutator")) out.push_back(verify_jj_commutator());
    if (want("central-charge")) out.push_back(verify_central_charge());
    if (want("determinant")) out.push_back(verify_determinant_battery());
    if (want("borcherds")) out.push_back(verify_borcherds_battery(100));
    if (want("whittaker")) out.push_back(verify_whittaker_battery());
    if (want("oj-expansion")) out.push_back(verify_oj_battery());
    if (out.empty()) {
        throw ParseError("unknown verification '" + only +
                         "' (names: P9 P10 lie-oj jj-commutator central-charge determinant "
                         "borcherds whittaker oj-expansion)");
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the rank-1 free-boson vertex algebra, its Z2 orbifold "
                 "and their Whittaker modules"};
    app.require_subcommand(1);
    app.fallthrough(); // allow --format after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    // product
    auto* product = app.add_subcommand("product", "n-th product u_n v in the algebra");
    std::string prod_u, prod_v;
    long long prod_n = 0;
    product->add_option("-u,--left", prod_u, "left element")->required();
    product->add_option("-n,--mode", prod_n, "product index n")->required();
    product->add_option("-v,--right", prod_v, "right element")->required();

    // commutator
    auto* comm = app.add_subcommand("commutator", "expansion of [u_i, v_j] into modes of u_k v");
    std::string comm_u, comm_v;
    long long comm_i = 0, comm_j = 0;
    comm->add_option("-u,--left", comm_u)->required();
    comm->add_option("-i,--left-mode", comm_i)->required();
    comm->add_option("-v,--right", comm_v)->required();
    comm->add_option("-j,--right-mode", comm_j)->required();

    // act
    auto* act = app.add_subcommand("act", "mode action u_n w on a Whittaker module vector");
    std::string act_sector = "untwisted", act_zeta, act_u, act_n, act_w = "u";
    act->add_option("--sector", act_sector, "untwisted or twisted");
    act->add_option("--zeta", act_zeta, "module parameters, e.g. 0,2")->required();
    act->add_option("--u", act_u, "algebra element")->required();
    act->add_option("--n", act_n, "mode index (integer or half-integer like 7/2)")->required();
    act->add_option("--w", act_w, "module vector in the 'u' grammar (default: cyclic vector)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    std::string verify_only;
    verify->add_option("--only", verify_only, "run a single named verification");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "module containing a Whittaker vector "
                                                        "of the given type");
    long long cls_s = 0;
    std::string cls_lambda;
    classify_cmd->add_option("--s", cls_s, "top index s >= 2")->required();
    classify_cmd->add_option("--lambda", cls_lambda, "eigenvalues lambda_{floor(s/2)+1..s}")
        ->required();

    // dims
    auto* dims = app.add_subcommand("dims", "graded dimension: partitions with a length parity");
    long long dims_n = 0;
    std::string dims_parity = "all";
    dims->add_option("--n", dims_n, "weight")->required();
    dims->add_option("--parity", dims_parity, "even, odd or all")
        ->check(CLI::IsMember({"even", "odd", "all"}));

    // cmn
    auto* cmn = app.add_subcommand("cmn", "coefficients of the twisted correction series");
    long long cmn_maxdeg = 0;
    cmn->add_option("--maxdeg", cmn_maxdeg, "compute all c_mn with m+n <= maxdeg")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        const bool structured = (format == "structured");

        if (*product) {
            FockVector u = element_arg(prod_u, Sector::Untwisted);
            FockVector v = element_arg(prod_v, Sector::Untwisted);
            FockVector result = nth_product(u, prod_n, v);
            if (structured) print_terms_structured(result, "vac");
            else std::cout << format_element(result) << "\n";
            return 0;
        }

        if (*comm) {
            FockVector u = element_arg(comm_u, Sector::Untwisted);
            FockVector v = element_arg(comm_v, Sector::Untwisted);
            auto terms = commutator_expansion(u, comm_i, v, comm_j);
            for (const auto& t : terms) {
                if (structured) {
                    std::cout << t.k << "\t" << t.coeff.str() << "\t" << t.mode << "\t"
                              << format_element(t.element) << "\n";
                } else {
                    std::cout << "k=" << t.k << "  coeff=" << t.coeff.str() << "  mode=" << t.mode
                              << "  element=" << format_element(t.element) << "\n";
                }
            }
            if (terms.empty() && !structured) std::cout << "0\n";
            return 0;
        }

        if (*act) {
            WhittakerParams params(sector_arg(act_sector), rational_list(act_zeta));
            FockVector u = element_arg(act_u, Sector::Untwisted);
            HalfInt n = parse_halfint(act_n);
            ModuleVector w{params, parse_element(act_w, params.sector, "u")};
            ModuleVector result = module_mode_action(u, n, w);
            if (structured) print_terms_structured(result.vec, "u");
            else std::cout << format_element(result.vec, "u") << "\n";
            return 0;
        }

        if (*verify) {
            auto reports = run_battery(verify_only);
            bool all = true;
            for (const auto& rep : reports) {
                all = all && rep.pass;
                if (structured) {
                    std::cout << rep.name << "\t" << (rep.pass ? "pass" : "FAIL") << "\t"
                              << rep.residual_terms() << "\n";
                } else {
                    std::cout << (rep.pass ? "pass" : "FAIL") << "  " << rep.name
                              << "  (residual terms: " << rep.residual_terms() << ")";
                    if (!rep.detail.empty()) std::cout << "  -- " << rep.detail;
                    std::cout << "\n";
                }
            }
            return all ? 0 : kExitVerifyFailed;
        }

        if (*classify_cmd) {
            WhittakerType type(cls_s, rational_list(cls_lambda));
            ModuleDescriptor d = fockcas::classify(type);
            if (structured) {
                std::cout << sector_name(d.params.sector) << "\t" << d.params.r() << "\t";
                for (std::size_t k = 0; k < d.params.zeta.size(); ++k) {
                    if (k) std::cout << ",";
                    std::cout << d.params.zeta[k].str();
                }
                std::cout << "\n";
            } else {
                std::cout << d.str() << "\n";
            }
            return 0;
        }

        if (*dims) {
            Parity p = dims_parity == "even" ? Parity::Even
                       : dims_parity == "odd" ? Parity::Odd
                                              : Parity::All;
            std::cout << graded_dim(dims_n, p).get_str() << "\n";
            return 0;
        }

        if (*cmn) {
            CmnTable table = cmn_table(cmn_maxdeg);
            for (long m = 0; m <= table.maxdeg(); ++m) {
                for (long n = 0; m + n <= table.maxdeg(); ++n) {
                    const Rational& c = table.at(m, n);
                    if (structured) {
                        std::cout << m << "\t" << n << "\t" << c.numerator().get_str() << "\t"
                                  << c.denominator().get_str() << "\n";
                    } else {
                        std::cout << "c[" << m << "][" << n << "] = " << c.str() << "\n";
                    }
                }
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const SectorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DegenerateType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const NotWhittaker& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const IrrationalParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DegenerateInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
