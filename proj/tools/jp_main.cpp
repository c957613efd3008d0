// Command-line front end: enumeration, coefficient tables, identity
// verification profiles, and machine-readable report emission.
//
// Exit codes: 0 all checks pass / success, 1 a mathematical check failed,
// 2 usage error, 3 truncation inadequacy.

#include <CLI11.hpp>

#include "jp/errors.hpp"
#include "jp/genfun.hpp"
#include "jp/overpartition.hpp"
#include "jp/pochhammer.hpp"
#include "jp/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncation = 3;

struct Options {
    int K = 0;
    int i = -1;
    int j = -1;
    int length = -1;
    int weight = -1;
    int restrict_K = 0;
    int z_max = -1;
    int q_max = -1;
    std::string format = "text";
    std::string out_path;
    std::string profile;
    int threads = 1;
    bool z1 = false;
    bool congruence = false;
    std::string series_kind;
    std::vector<std::string> checks;
    std::vector<int> jagged_in;
    std::vector<int> alpha_in;
    std::vector<int> beta_in;
    bool have_jagged = false;
    bool have_alpha = false;
    bool have_beta = false;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out_path);
        f << payload;
    }
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

int cmd_enumerate(const Options& opt) {
    if (opt.length < 0 || opt.weight < 0) {
        std::cerr << "enumerate: --length and --weight are required and must be >= 0\n";
        return kExitUsage;
    }
    std::optional<jp::RestrictionParams> r;
    if (opt.restrict_K != 0) r.emplace(opt.restrict_K);
    auto list = jp::enumerate_jagged(opt.length, opt.weight, r);
    if (opt.format == "json") {
        emit(opt, jp::to_json(list));
    } else if (opt.format == "csv") {
        std::string out;
        for (const auto& p : list) {
            for (size_t t = 0; t < p.size(); ++t) {
                if (t > 0) out += ',';
                out += std::to_string(p[t]);
            }
            out += '\n';
        }
        emit(opt, out);
    } else {
        emit(opt, jp::to_text(list) + "total " + std::to_string(list.size()) + "\n");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int cmd_count(const Options& opt) {
    if (opt.K < 3) {
        std::cerr << "count: --K >= 3 is required\n";
        return kExitUsage;
    }
    if (opt.congruence) {
        // weight-indexed counts of congruence-restricted overpartitions
        if (opt.i < 1 || opt.weight < 0) {
            std::cerr << "count --congruence: --i >= 1 and --weight are required\n";
            return kExitUsage;
        }
        jp::RestrictionParams r(opt.K);
        if (opt.i > r.kappa()) {
            std::cerr << "count: boundary index out of range\n";
            return kExitUsage;
        }
        std::vector<std::pair<int, long long>> rows;
        for (int n = 0; n <= opt.weight; ++n)
            rows.emplace_back(n, jp::count_congruence_restricted(r, opt.i, n));
        if (opt.format == "json") {
            std::string out = "[";
            for (size_t t = 0; t < rows.size(); ++t) {
                if (t > 0) out += ',';
                out += "[" + std::to_string(rows[t].first) + "," +
                       std::to_string(rows[t].second) + "]";
            }
            emit(opt, out + "]");
        } else {
            emit(opt, jp::sequence_csv(rows));
        }
        return kExitOk;
    }
    if ((opt.i >= 0) == (opt.j >= 0)) {
        std::cerr << "count: exactly one of --i / --j is required\n";
        return kExitUsage;
    }
    const int m_max = opt.length >= 0 ? opt.length : 10;
    const int n_max = opt.weight >= 0 ? opt.weight : 16;
    jp::RestrictionParams r(opt.K);
    const char kind = opt.i >= 0 ? 'A' : 'B';
    const int index = opt.i >= 0 ? opt.i : opt.j;
    if (index < 0 || (kind == 'A' && index > r.kappa()) || (kind == 'B' && index > r.K)) {
        std::cerr << "count: boundary index out of range\n";
        return kExitUsage;
    }
    jp::JaggedCounts counts(r, m_max, n_max);
    if (opt.format == "json") {
        std::string out = "{\"K\":" + std::to_string(opt.K) + ",\"kind\":\"" + kind +
                          "\",\"index\":" + std::to_string(index) + ",\"rows\":[";
        bool first = true;
        for (int m = 0; m <= m_max; ++m)
            for (int n = 0; n <= n_max; ++n) {
                if (!first) out += ',';
                first = false;
                const long long c = kind == 'A' ? counts.count_A(index, m, n)
                                                : counts.count_B(index, m, n);
                out += "[" + std::to_string(m) + "," + std::to_string(n) + "," +
                       std::to_string(c) + "]";
            }
        out += "]}";
        emit(opt, out);
    } else {
        emit(opt, jp::count_table_csv(counts, kind, index));
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

int cmd_series(const Options& opt) {
    const std::string& kind = opt.series_kind;
    const int q_max = opt.q_max >= 0 ? opt.q_max : 24;

    auto emit_bivariate = [&](const jp::BivariateSeries& s) {
        if (opt.format == "json")
            emit(opt, jp::to_json(s));
        else
            emit(opt, jp::series_csv(s));
    };
    auto emit_univariate = [&](const jp::PowerSeries& s) {
        if (opt.format == "json")
            emit(opt, jp::to_json(s));
        else
            emit(opt, jp::series_csv(s));
    };

    if (kind == "product" || kind == "alt-product") {
        if (opt.K < 3 || opt.i < 1) {
            std::cerr << "series " << kind << ": --K >= 3 and --i >= 1 are required\n";
            return kExitUsage;
        }
        jp::RestrictionParams r(opt.K);
        if (kind == "product") {
            emit_univariate(jp::product_side(r, opt.i, q_max));
        } else {
            if (r.epsilon() != 1) {
                std::cerr << "series alt-product: K must be odd\n";
                return kExitUsage;
            }
            emit_univariate(jp::product_side_odd(r.kappa(), opt.i, q_max));
        }
        return kExitOk;
    }

    if (kind == "jagged") {
        const int z_max = opt.z_max >= 0 ? opt.z_max : 12;
        emit_bivariate(jp::unrestricted_jagged_gf(z_max, q_max));
        return kExitOk;
    }

    if (kind != "A" && kind != "B" && kind != "F" && kind != "stair-A" && kind != "stair-F") {
        std::cerr << "series: unknown kind '" << kind
                  << "' (expected A, B, F, product, alt-product, jagged, stair-A, stair-F)\n";
        return kExitUsage;
    }

    const bool is_b = kind == "B";
    const bool is_f = kind == "F" || kind == "stair-F";
    const bool is_stair = kind.rfind("stair-", 0) == 0;

    int z_needed;
    std::function<jp::BivariateSeries(int, int)> build;
    if (is_f) {
        if (opt.K < 1 || opt.i < 0) {
            std::cerr << "series F: --k >= 1 and --i are required\n";
            return kExitUsage;
        }
        z_needed = jp::z1_required_zmax_f(opt.K, q_max);
        build = [&](int zm, int qm) { return jp::andrews_f(opt.K, opt.i, zm, qm); };
    } else {
        if (opt.K < 3 || (is_b ? opt.j < 0 : opt.i < 0)) {
            std::cerr << "series " << kind << ": --K >= 3 and a boundary index are required\n";
            return kExitUsage;
        }
        jp::RestrictionParams r(opt.K);
        z_needed = jp::z1_required_zmax(r, q_max);
        if (is_b)
            build = [&, r](int zm, int qm) { return jp::series_B(r, opt.j, zm, qm); };
        else
            build = [&, r](int zm, int qm) { return jp::series_A(r, opt.i, zm, qm); };
    }

    if (opt.z1) {
        const int z_max = opt.z_max >= 0 ? opt.z_max : z_needed;
        // specialize_z1 throws TruncationError (exit 3) when z_max < z_needed
        emit_univariate(jp::specialize_z1(build(z_max, q_max), z_needed));
        return kExitOk;
    }
    const int z_max = opt.z_max >= 0 ? opt.z_max : 12;
    jp::BivariateSeries s = build(z_max, q_max);
    if (is_stair) s = jp::staircase(s);
    emit_bivariate(s);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyJob {
    std::string label;
    std::function<jp::IdentityReport()> run;
};

struct VerifyScale {
    std::vector<int> series_Ks{3, 4, 5, 6, 7};
    std::vector<int> count_Ks{3, 4, 5, 6, 7};
    std::vector<int> even_Ks{4, 6};
    std::vector<int> product_Ks{3, 4, 5, 6};
    std::vector<int> congruence_Ks{3, 4};
    int counts_m = 10, counts_n = 14;
    int oracle_m = 10, oracle_n = 16;
    int z_max = 10, q_max = 20;
    int product_qmax = 32;
    int distance_z = 8, distance_q = 24;
    int congruence_n = 12;
    int bijection_w = 10;
    int duality_w = 10, duality_K = 6, duality_shift = 3;
    std::vector<int> andrews_ks{2, 3, 4};
};

VerifyScale full_scale() {
    VerifyScale s;
    s.series_Ks = {3, 4, 5, 6, 7};
    s.count_Ks = {3, 4, 5, 6, 7};
    s.even_Ks = {4, 6, 8};
    s.product_Ks = {3, 4, 5, 6, 7, 8};
    s.congruence_Ks = {3, 4, 5};
    s.counts_m = 12;
    s.counts_n = 18;
    s.oracle_m = 12;
    s.oracle_n = 20;
    s.z_max = 12;
    s.q_max = 24;
    s.product_qmax = 40;
    s.distance_z = 10;
    s.distance_q = 30;
    s.congruence_n = 15;
    s.bijection_w = 12;
    s.duality_w = 12;
    return s;
}

const std::vector<std::string> kCheckNames = {
    "counts-recurrence",  "series-counts", "series-recurrence", "andrews-recurrence",
    "even-factorization", "distance2",     "distance3",         "products",
    "overpartition-congruence", "bijection", "exclusion-duality"};

std::vector<VerifyJob> make_jobs(const std::string& check, const VerifyScale& s,
                                 const Options& opt) {
    std::vector<VerifyJob> jobs;
    auto use_Ks = [&](const std::vector<int>& defaults) {
        if (opt.K >= 3) return std::vector<int>{opt.K};
        return defaults;
    };
    const int z_max = opt.z_max >= 0 ? opt.z_max : s.z_max;
    const int q_max = opt.q_max >= 0 ? opt.q_max : s.q_max;
    const int prod_q = opt.q_max >= 0 ? opt.q_max : s.product_qmax;
    const int counts_m = opt.length >= 0 ? opt.length : s.counts_m;
    const int counts_n = opt.weight >= 0 ? opt.weight : s.counts_n;
    const int oracle_m = opt.length >= 0 ? opt.length : s.oracle_m;
    const int oracle_n = opt.weight >= 0 ? opt.weight : s.oracle_n;

    if (check == "counts-recurrence") {
        for (int K : use_Ks(s.count_Ks))
            jobs.push_back({check, [=] {
                                return jp::check_count_recurrences(jp::RestrictionParams(K),
                                                                   counts_m, counts_n);
                            }});
    } else if (check == "series-counts") {
        for (int K : use_Ks(s.series_Ks))
            jobs.push_back({check, [=] {
                                return jp::check_series_vs_counts(jp::RestrictionParams(K),
                                                                  oracle_m, oracle_n);
                            }});
    } else if (check == "series-recurrence") {
        for (int K : use_Ks(s.series_Ks))
            jobs.push_back({check, [=] {
                                return jp::check_qdifference_relations(jp::RestrictionParams(K),
                                                                       z_max, q_max);
                            }});
    } else if (check == "andrews-recurrence") {
        for (int k : s.andrews_ks)
            jobs.push_back({check, [=] { return jp::check_andrews_recurrence(k, z_max, q_max); }});
    } else if (check == "even-factorization") {
        for (int K : use_Ks(s.even_Ks)) {
            jobs.push_back({check, [=] {
                                return jp::check_even_factorization(jp::RestrictionParams(K),
                                                                    z_max, q_max);
                            }});
            jobs.push_back({"factored-solution", [=] {
                                return jp::check_factored_solution(K / 2, z_max, q_max);
                            }});
        }
    } else if (check == "distance2") {
        const int dz = opt.z_max >= 0 ? opt.z_max : s.distance_z;
        const int dq = opt.q_max >= 0 ? opt.q_max : s.distance_q;
        jobs.push_back({check, [=] {
                            return jp::check_distance2_partitions(dz, dq, (dz + 3) / 2 + 1);
                        }});
    } else if (check == "distance3") {
        const int dz = opt.z_max >= 0 ? opt.z_max : s.distance_z;
        const int dq = opt.q_max >= 0 ? opt.q_max : s.distance_q;
        jobs.push_back({check, [=] { return jp::check_distance3_partitions(dz, dq); }});
    } else if (check == "products") {
        for (int K : use_Ks(s.product_Ks)) {
            jp::RestrictionParams r(K);
            for (int i = 1; i <= r.kappa(); ++i) {
                if (opt.i >= 1 && i != opt.i) continue;
                jobs.push_back({check, [=] {
                                    return jp::check_product_identities(jp::RestrictionParams(K),
                                                                        i, prod_q);
                                }});
            }
        }
    } else if (check == "overpartition-congruence") {
        for (int K : use_Ks(s.congruence_Ks))
            jobs.push_back({check, [=] {
                                return jp::check_congruence_counts(jp::RestrictionParams(K),
                                                                   opt.weight >= 0 ? opt.weight
                                                                                   : s.congruence_n);
                            }});
    } else if (check == "bijection") {
        jobs.push_back({check, [=] {
                            return jp::check_bijection(opt.weight >= 0 ? opt.weight
                                                                       : s.bijection_w);
                        }});
    } else if (check == "exclusion-duality") {
        jobs.push_back({check, [=] {
                            return jp::check_exclusion_duality(
                                opt.weight >= 0 ? opt.weight : s.duality_w,
                                opt.K >= 3 ? opt.K : s.duality_K, s.duality_shift);
                        }});
    }
    return jobs;
}

std::vector<jp::IdentityReport> run_jobs(const std::vector<VerifyJob>& jobs, int threads) {
    std::vector<jp::IdentityReport> reports(jobs.size());
    auto run_one = [&](size_t idx) {
        try {
            reports[idx] = jobs[idx].run();
        } catch (const std::exception& e) {
            jp::IdentityReport r;
            r.name = jobs[idx].label;
            r.fail({std::string("exception: ") + e.what(), -1, -1, "-", "-"});
            reports[idx] = std::move(r);
        }
    };
    if (threads <= 1 || jobs.size() <= 1) {
        for (size_t idx = 0; idx < jobs.size(); ++idx) run_one(idx);
        return reports;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t idx; (idx = next.fetch_add(1)) < jobs.size();) run_one(idx);
    };
    std::vector<std::thread> pool;
    const size_t n = std::min<size_t>(threads, jobs.size());
    pool.reserve(n);
    for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

int cmd_verify(const Options& opt) {
    std::vector<std::string> selected = opt.checks;
    if (selected.empty()) {
        if (opt.profile.empty()) {
            std::cerr << "verify: pass check names or --profile quick|full\n";
            return kExitUsage;
        }
        selected = kCheckNames;
    }
    VerifyScale scale;
    if (opt.profile == "full")
        scale = full_scale();
    else if (!opt.profile.empty() && opt.profile != "quick") {
        std::cerr << "verify: unknown profile '" << opt.profile << "'\n";
        return kExitUsage;
    }

    std::vector<VerifyJob> jobs;
    for (const std::string& name : selected) {
        if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end()) {
            std::cerr << "verify: unknown check '" << name << "'\n";
            return kExitUsage;
        }
        auto batch = make_jobs(name, scale, opt);
        jobs.insert(jobs.end(), batch.begin(), batch.end());
    }
    if (jobs.empty()) {
        std::cerr << "verify: nothing to run\n";
        return kExitUsage;
    }

    auto reports = run_jobs(jobs, opt.threads);

    bool all_pass = true;
    std::string text;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        text += jp::to_text(r) + "\n";
    }
    if (opt.format == "json") {
        emit(opt, jp::to_json(reports));
        if (!opt.out_path.empty()) std::cout << text;
    } else {
        if (!opt.out_path.empty()) emit(opt, jp::to_json(reports));
        std::cout << text;
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

int cmd_bijection(const Options& opt) {
    const bool convert_forward = opt.have_jagged;
    const bool convert_back = opt.have_alpha || opt.have_beta;
    const bool weight_check = opt.weight >= 0;
    if (convert_forward + convert_back + weight_check != 1) {
        std::cerr << "bijection: pass exactly one of --jagged, --alpha/--beta, --weight\n";
        return kExitUsage;
    }
    if (convert_forward) {
        jp::Overpartition o = jp::jagged_to_overpartition(opt.jagged_in);
        if (opt.format == "text") {
            std::string t = "alpha:";
            for (int v : o.alpha) t += ' ' + std::to_string(v);
            t += "\nbeta:";
            for (int v : o.beta) t += ' ' + std::to_string(v);
            emit(opt, t + "\n");
        } else {
            emit(opt, jp::to_json(o));
        }
        return kExitOk;
    }
    if (convert_back) {
        jp::Overpartition o{opt.alpha_in, opt.beta_in};
        jp::Parts p = jp::overpartition_to_jagged(o);
        emit(opt, jp::to_json(std::vector<jp::Parts>{p}));
        return kExitOk;
    }
    auto report = jp::check_bijection(opt.weight);
    emit(opt, opt.format == "json" ? jp::to_json(report) : jp::to_text(report) + "\n");
    return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating functions, counts and identity checks for restricted "
                 "jagged partitions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "output format: json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", opt.out_path, "write machine output to this file");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list jagged partitions");
    enumerate->add_option("--length", opt.length, "number of parts")->required();
    enumerate->add_option("--weight", opt.weight, "sum of parts")->required();
    enumerate->add_option("--restrict", opt.restrict_K, "restriction order K");
    add_common(enumerate);

    auto* count = app.add_subcommand("count", "tabulate restricted counts");
    count->add_option("--K", opt.K, "restriction order")->required();
    count->add_option("--i", opt.i, "pair-tail boundary index");
    count->add_option("--j", opt.j, "ones-tail boundary index");
    count->add_option("--length", opt.length, "largest length in the table");
    count->add_option("--weight", opt.weight, "largest weight in the table");
    count->add_flag("--congruence", opt.congruence,
                    "emit weight-indexed congruence-restricted overpartition counts");
    add_common(count);

    auto* series = app.add_subcommand("series", "emit a coefficient table");
    series->add_option("kind", opt.series_kind,
                       "A | B | F | product | alt-product | jagged | stair-A | stair-F")
        ->required();
    series->add_option("--K,--k", opt.K, "restriction order (Andrews index for F)");
    series->add_option("--i", opt.i, "boundary index (A/F/product)");
    series->add_option("--j", opt.j, "boundary index (B)");
    series->add_option("--zmax", opt.z_max, "z truncation order");
    series->add_option("--qmax", opt.q_max, "q truncation order");
    series->add_flag("--z1", opt.z1, "emit the z = 1 specialization (exit 3 if --zmax is "
                                     "below the adequacy bound)");
    add_common(series);

    auto* verify = app.add_subcommand("verify", "run identity check suites");
    verify->add_option("checks", opt.checks, "check names (default: all in the profile)");
    verify->add_option("--profile", opt.profile, "quick | full");
    verify->add_option("--K", opt.K, "restrict K-parameterized checks to this K");
    verify->add_option("--i", opt.i, "restrict product checks to this boundary index");
    verify->add_option("--zmax", opt.z_max, "override z truncation");
    verify->add_option("--qmax", opt.q_max, "override q truncation");
    verify->add_option("--length", opt.length, "override grid length bound");
    verify->add_option("--weight", opt.weight, "override grid weight bound");
    verify->add_option("--threads", opt.threads, "run independent checks on this many threads");
    add_common(verify);

    auto* bijection = app.add_subcommand("bijection", "convert between jagged partitions and "
                                                      "overpartitions");
    bijection->add_option("--jagged", opt.jagged_in, "comma-separated parts")
        ->delimiter(',');
    bijection->add_option("--alpha", opt.alpha_in, "overlined parts")->delimiter(',');
    bijection->add_option("--beta", opt.beta_in, "plain parts")->delimiter(',');
    bijection->add_option("--weight", opt.weight, "exhaustive round-trip check at this weight");
    add_common(bijection);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    opt.have_jagged = bijection->count("--jagged") > 0;
    opt.have_alpha = bijection->count("--alpha") > 0;
    opt.have_beta = bijection->count("--beta") > 0;

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (count->parsed()) return cmd_count(opt);
        if (series->parsed()) return cmd_series(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (bijection->parsed()) return cmd_bijection(opt);
    } catch (const jp::TruncationError& e) {
        std::cerr << "truncation inadequacy: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const jp::BijectionError& e) {
        std::cerr << "bijection fault: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
