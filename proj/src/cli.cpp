#include "specht/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>

#include "specht/json_io.hpp"
#include "specht/selftest.hpp"

namespace specht {

namespace {

int thread_count() {
    const char* env = std::getenv("SPECHT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 1 ? v : 1;
}

// fan independent reports out across threads, preserving order
template <typename Report>
std::vector<Report> run_batch(std::vector<std::function<Report()>> jobs) {
    int threads = thread_count();
    std::vector<Report> out;
    out.reserve(jobs.size());
    if (threads <= 1) {
        for (auto& job : jobs) out.push_back(job());
        return out;
    }
    std::vector<std::future<Report>> futures;
    for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

struct Sink {
    std::ostream& out;
    bool json = false;
    std::string out_path;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();

    void text(const std::string& line) {
        if (!json) out << line << '\n';
    }
    template <typename Report>
    void report(const Report& rep, const std::string& line) {
        if (json)
            reports.push_back(report_to_json(rep));
        else
            out << line << '\n';
    }
    void flush() {
        if (!json) return;
        std::string body = reports.dump(2) + "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << body;
        } else {
            out << body;
        }
    }
};

std::string verdict_line(const DecompReport& rep) {
    std::ostringstream os;
    os << rep.name;
    for (const auto& [k, v] : rep.params) os << ' ' << k << '=' << v;
    os << ": rank " << rep.rank << " / expected " << rep.expected_dim << " -> "
       << (rep.pass ? "pass" : "FAIL");
    return os.str();
}

std::string verdict_line(const StabilityReport& rep) {
    std::ostringstream os;
    os << rep.op_name;
    for (const auto& [k, v] : rep.params) os << ' ' << k << '=' << v;
    os << " -> " << (rep.pass ? "pass" : "FAIL");
    return os.str();
}

struct CommonArgs {
    int n = -1, d = -1, k = -1, s = -1, ell = -1;
    int max_n = -1, max_sum = -1;
    std::string m_text, t_text, i_text, lambda_text, alpha_text;
    bool hom = false, by_content = false, nonhom = false;
};

BoundedMultiset need_multiset(const CommonArgs& a) {
    if (a.i_text.empty() || a.n < 0) throw CLI::ValidationError("--i and --n are required");
    return parse_multiset(a.i_text, a.n);
}

int run_specht_cmd(const CommonArgs& a, Sink& sink) {
    Tableau t = parse_tableau(a.t_text);
    Tableau m_tab = parse_tableau(a.m_text);
    SemiStandardTableau m(m_tab);
    SymmetrizerContext ctx(t);
    MultiPoly f = specht_polynomial(m, ctx);
    if (sink.json) {
        nlohmann::ordered_json j;
        j["F"] = poly_to_json(f);
        j["Q"] = poly_to_json(specht_quotient(m, ctx));
        if (!a.i_text.empty()) {
            CochargeTableau c(m_tab);
            BoundedMultiset iset = parse_multiset(a.i_text, m.size());
            j["F_I"] = poly_to_json(augmented(c, ctx, iset, AugmentedVariant::plain));
            j["F_I_hom"] = poly_to_json(augmented(c, ctx, iset, AugmentedVariant::homogeneous));
        }
        sink.reports.push_back(std::move(j));
        return 0;
    }
    sink.text("F   = " + f.to_string());
    sink.text("Q   = " + specht_quotient(m, ctx).to_string());
    if (!a.i_text.empty()) {
        CochargeTableau c(m_tab);
        BoundedMultiset iset = parse_multiset(a.i_text, m.size());
        sink.text("F^I     = " + augmented(c, ctx, iset, AugmentedVariant::plain).to_string());
        sink.text("F^I,hom = " +
                  augmented(c, ctx, iset, AugmentedVariant::homogeneous).to_string());
    }
    return 0;
}

int emit_reports(const std::vector<DecompReport>& reps, Sink& sink) {
    bool all = true;
    for (const DecompReport& rep : reps) {
        sink.report(rep, verdict_line(rep));
        all = all && rep.pass;
    }
    return all ? 0 : 1;
}

int emit_reports(const std::vector<StabilityReport>& reps, Sink& sink) {
    bool all = true;
    for (const StabilityReport& rep : reps) {
        sink.report(rep, verdict_line(rep));
        all = all && rep.pass;
    }
    return all ? 0 : 1;
}

int run_verify(const std::string& name, const CommonArgs& a, Sink& sink) {
    using DJobs = std::vector<std::function<DecompReport()>>;
    using SJobs = std::vector<std::function<StabilityReport()>>;

    if (name == "fmtdecom" || name == "multci") {
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 4);
        int min_n = a.n > 0 ? a.n : 1;
        int max_d = a.max_sum >= 0 ? a.max_sum : (a.d >= 0 ? a.d : 4);
        int min_d = a.d >= 0 ? a.d : 0;
        DJobs jobs;
        for (int n = min_n; n <= max_n; ++n)
            for (int d = min_d; d <= max_d; ++d) {
                if (name == "fmtdecom")
                    jobs.push_back([n, d] { return qxnd_full(n, d, QxndGrouping::by_content); });
                else
                    jobs.push_back([n, d] { return qxnd_cocharge(n, d); });
            }
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "rnks-dim") {
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 5);
        int min_n = a.n > 0 ? a.n : 1;
        int max_k = a.k > 0 ? a.k : 4;
        int min_k = a.k > 0 ? a.k : 1;
        DJobs jobs;
        for (int n = min_n; n <= max_n; ++n)
            for (int k = min_k; k <= max_k; ++k)
                for (int s = (a.s >= 0 ? a.s : 0); s <= (a.s >= 0 ? a.s : std::min(n, k)); ++s)
                    jobs.push_back([n, k, s] { return verify_rnks_dim(n, k, s); });
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "splexseq") {
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 4);
        int min_n = a.n > 0 ? a.n : 1;
        int max_k = a.k > 0 ? a.k : 4;
        int min_k = a.k > 0 ? a.k : 1;
        DJobs jobs;
        for (int n = min_n; n <= max_n; ++n)
            for (int k = min_k; k <= max_k; ++k)
                for (int s = (a.s >= 0 ? a.s : 0);
                     s <= (a.s >= 0 ? a.s : std::min(k - 1, n)); ++s)
                    jobs.push_back([n, k, s] { return verify_splexseq(n, k, s); });
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "forstab") {
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 3);
        int min_n = a.n > 0 ? a.n : 1;
        int max_sum = a.max_sum >= 0 ? a.max_sum : 3;
        long long total = 0, passed = 0;
        for (int n = min_n; n <= max_n; ++n)
            for (const PartitionShape& lambda : partitions_of(n))
                for (int d = 0; d <= max_sum; ++d)
                    for (const SemiStandardTableau& m : enumerate_ssyt_by_sum(lambda, d))
                        for (const StandardTableau& t : enumerate_syt(lambda)) {
                            ++total;
                            if (verify_forstab(m, t.tab())) ++passed;
                        }
        StabilityReport rep;
        rep.op_name = "forstab";
        rep.params = {{"max_n", std::to_string(max_n)}, {"max_sum", std::to_string(max_sum)}};
        rep.checks.push_back({"cases", total, passed});
        rep.finish();
        return emit_reports(std::vector<StabilityReport>{rep}, sink);
    }
    if (name == "mapsmulti") {
        SJobs jobs;
        bool nonhom = a.nonhom;
        auto one = [nonhom](int n, const BoundedMultiset& iset) {
            return nonhom ? verify_mapsmulti_nonhom(n, iset) : verify_mapsmulti(n, iset);
        };
        if (!a.i_text.empty()) {
            BoundedMultiset iset = need_multiset(a);
            int n = a.n;
            jobs.push_back([one, n, iset] { return one(n, iset); });
        } else {
            int n = a.n > 0 ? a.n : 3;
            for (int size = 0; size <= 3; ++size)
                for (const BoundedMultiset& iset : multisets_of_size(size, 0, n, n))
                    jobs.push_back([one, n, iset] { return one(n, iset); });
        }
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "homdecom") {
        SJobs jobs;
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 3);
        int min_n = a.n > 0 ? a.n : 1;
        int max_k = a.k >= 0 ? a.k : 3;
        int min_k = a.k >= 0 ? a.k : 0;
        for (int n = min_n; n <= max_n; ++n)
            for (int k = min_k; k <= max_k; ++k)
                for (int s = (a.s >= 0 ? a.s : 0);
                     s <= (a.s >= 0 ? a.s : std::min({n + 1, k + 1})); ++s) {
                    if (s > std::min(n + 1, k) && s != k + 1) continue;
                    jobs.push_back([n, k, s] { return verify_homdecom(n, k, s); });
                }
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "opersvm") {
        SJobs jobs;
        int max_n = a.max_n > 0 ? a.max_n : (a.n > 0 ? a.n : 3);
        int min_n = a.n > 0 ? a.n : 1;
        int max_d = a.max_sum >= 0 ? a.max_sum : (a.d >= 0 ? a.d : 5);
        int min_d = a.d >= 0 ? a.d : 0;
        std::optional<Content> eta;
        if (!a.i_text.empty()) {
            // --i doubles as the content of length n+1 restricting the check
            BoundedMultiset vals = parse_multiset(a.i_text, 1 << 20);
            eta = Content(vals.elements());
        }
        for (int n = min_n; n <= max_n; ++n)
            for (int d = min_d; d <= max_d; ++d)
                jobs.push_back([n, d, eta] { return verify_opersvm(n, d, eta); });
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "extvmlim") {
        int n = a.n > 0 ? a.n : 4;
        int d = a.d >= 0 ? a.d : 2;
        return emit_reports(std::vector<StabilityReport>{verify_extvmlim(n, d)}, sink);
    }
    if (name == "inci") {
        SJobs jobs;
        if (!a.i_text.empty()) {
            BoundedMultiset iset = need_multiset(a);
            int n = a.n, ell = a.ell;
            if (ell < 0) throw CLI::ValidationError("--ell is required for inci");
            jobs.push_back([n, iset, ell] { return verify_inci(n, iset, ell); });
        } else {
            int n = a.n > 0 ? a.n : 3;
            for (int size = 0; size <= 2; ++size)
                for (const BoundedMultiset& iset : multisets_of_size(size, 0, n, n))
                    for (int ell = 0; ell <= n; ++ell)
                        jobs.push_back([n, iset, ell] { return verify_inci(n, iset, ell); });
        }
        return emit_reports(run_batch(std::move(jobs)), sink);
    }
    if (name == "bijvecs") {
        int max_n = a.max_n > 0 ? a.max_n : 5;
        int max_k = a.k > 0 ? a.k : 5;
        long long total = 0, passed = 0;
        // round trip over all subsets D of [1, n-1] and multi-sets containing D
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= max_k; ++k)
                for (int dsize = 0; dsize < k && dsize <= n - 1; ++dsize)
                    for (const BoundedMultiset& dms :
                         multisets_of_size(dsize, 1, n - 1, n)) {
                        bool is_set = true;
                        for (int i = 1; i < dms.size(); ++i)
                            if (dms.elements()[i] == dms.elements()[i - 1]) is_set = false;
                        if (!is_set) continue;
                        const std::vector<int>& dsp = dms.elements();
                        for (const BoundedMultiset& iset : multisets_of_size(k - 1, 0, n, n)) {
                            if (!multiset_contains_set(iset, dsp)) continue;
                            ++total;
                            HVectors hv = h_vectors_from_dset(dsp, iset);
                            bool ok =
                                hvec_to_multiset_plain(dsp, hv.h_plain, k, n) == iset &&
                                hvec_to_multiset_hom(dsp, hv.h_hom, k, n) == iset;
                            if (ok) ++passed;
                        }
                    }
        StabilityReport rep;
        rep.op_name = "bijvecs";
        rep.params = {{"max_n", std::to_string(max_n)}, {"max_k", std::to_string(max_k)}};
        rep.checks.push_back({"round_trips", total, passed});
        rep.finish();
        return emit_reports(std::vector<StabilityReport>{rep}, sink);
    }
    throw CLI::ValidationError("unknown verify target: " + name);
}

int run_count(const std::string& what, const CommonArgs& a, Sink& sink) {
    if (what == "ops") {
        if (a.n < 0 || a.k < 0) throw CLI::ValidationError("count ops needs --n and --k");
        long long v;
        if (!a.i_text.empty())
            v = op_count_I(a.n, parse_multiset(a.i_text, a.n));
        else
            v = op_count(a.n, a.k, a.s >= 0 ? a.s : 0);
        sink.text(std::to_string(v));
        if (sink.json) sink.reports.push_back({{"count", v}});
        return 0;
    }
    if (what == "kostka") {
        if (a.lambda_text.empty() || a.alpha_text.empty())
            throw CLI::ValidationError("count kostka needs --lambda and --alpha");
        long long v = kostka(parse_partition(a.lambda_text), parse_composition(a.alpha_text));
        sink.text(std::to_string(v));
        if (sink.json) sink.reports.push_back({{"count", v}});
        return 0;
    }
    if (what == "pairs") {
        if (a.lambda_text.empty() || a.d < 0)
            throw CLI::ValidationError("count pairs needs --lambda and --d");
        PartitionShape lambda = parse_partition(a.lambda_text);
        auto pairs = adlambda_pairs(lambda, a.d, lambda.n());
        sink.text(std::to_string(pairs.size()));
        if (sink.json) {
            nlohmann::ordered_json j;
            j["count"] = pairs.size();
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& [c, iset] : pairs)
                list.push_back({{"C", c.tab().rows()}, {"I", iset.elements()}});
            j["pairs"] = std::move(list);
            sink.reports.push_back(std::move(j));
        }
        return 0;
    }
    throw CLI::ValidationError("unknown count target: " + what);
}

int run_decompose(const std::string& what, const CommonArgs& a, Sink& sink) {
    if (what == "qxnd") {
        if (a.n < 0 || a.d < 0) throw CLI::ValidationError("decompose qxnd needs --n and --d");
        DecompReport rep = a.hom ? qxnd_cocharge(a.n, a.d)
                                 : qxnd_full(a.n, a.d,
                                             a.by_content ? QxndGrouping::by_content
                                                          : QxndGrouping::by_sum);
        if (!sink.json)
            for (const SummandLabel& l : rep.summands) sink.text("  " + l.to_string());
        return emit_reports(std::vector<DecompReport>{rep}, sink);
    }
    if (what == "rnks") {
        if (a.n < 0 || a.k < 0) throw CLI::ValidationError("decompose rnks needs --n and --k");
        DecompReport rep = verify_rnks_dim(a.n, a.k, a.s >= 0 ? a.s : 0);
        if (!sink.json)
            for (const SummandLabel& l : rep.summands) sink.text("  " + l.to_string());
        return emit_reports(std::vector<DecompReport>{rep}, sink);
    }
    if (what == "rnI") {
        BoundedMultiset iset = need_multiset(a);
        std::vector<SpannedRep> reps = a.hom ? r_nI_hom(iset) : r_nI(iset);
        DecompReport rep = verify_direct_sum(reps, op_count_I(a.n, iset));
        rep.name = a.hom ? "rnI_hom" : "rnI";
        rep.params = {{"n", std::to_string(a.n)}, {"I", iset.to_string()}};
        if (!sink.json)
            for (const SpannedRep& r : reps) sink.text("  " + r.label.to_string());
        return emit_reports(std::vector<DecompReport>{rep}, sink);
    }
    throw CLI::ValidationError("unknown decompose target: " + what);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalized higher Specht polynomial toolkit"};
    app.require_subcommand(1);

    CommonArgs a;
    bool json = false;
    std::string out_path;
    std::string verify_name, count_what, decompose_what;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", a.n, "number of variables");
        cmd->add_option("--d", a.d, "degree / entry sum");
        cmd->add_option("--k", a.k, "number of blocks");
        cmd->add_option("--s", a.s, "number of forced non-empty blocks");
        cmd->add_option("--ell", a.ell, "element added to the multi-set");
        cmd->add_option("--m", a.m_text, "tableau literal, rows as JSON");
        cmd->add_option("--t", a.t_text, "tableau with content 1..n, rows as JSON");
        cmd->add_option("--i", a.i_text, "multi-set literal as JSON array");
        cmd->add_option("--lambda", a.lambda_text, "partition literal as JSON array");
        cmd->add_option("--alpha", a.alpha_text, "weak composition literal as JSON array");
        cmd->add_option("--max-n", a.max_n, "range bound on n");
        cmd->add_option("--max-sum", a.max_sum, "range bound on the entry sum");
        cmd->add_flag("--hom", a.hom, "homogeneous variant");
        cmd->add_flag("--nonhom", a.nonhom, "non-homogeneous induction variant");
        cmd->add_flag("--by-content", a.by_content, "group by content");
        cmd->add_flag("--json", json, "emit JSON reports");
        cmd->add_option("--out", out_path, "write the JSON report to a file");
    };

    CLI::App* specht_cmd = app.add_subcommand("specht", "print Specht polynomials");
    add_common(specht_cmd);
    CLI::App* decompose_cmd = app.add_subcommand("decompose", "decompose a representation");
    decompose_cmd->add_option("what", decompose_what, "qxnd | rnks | rnI")->required();
    add_common(decompose_cmd);
    CLI::App* count_cmd = app.add_subcommand("count", "combinatorial counts");
    count_cmd->add_option("what", count_what, "ops | kostka | pairs")->required();
    add_common(count_cmd);
    CLI::App* verify_cmd = app.add_subcommand("verify", "machine-verify a theorem");
    verify_cmd->add_option("name", verify_name, "fmtdecom | multci | rnks-dim | splexseq | "
                                                "forstab | mapsmulti | homdecom | opersvm | "
                                                "extvmlim | inci | bijvecs")
        ->required();
    add_common(verify_cmd);
    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run all golden examples");
    add_common(selftest_cmd);

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "specht");
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    Sink sink{out, json, out_path};
    int code = 0;
    try {
        if (specht_cmd->parsed()) {
            if (a.m_text.empty() || a.t_text.empty())
                throw CLI::ValidationError("specht needs --m and --t");
            code = run_specht_cmd(a, sink);
        } else if (decompose_cmd->parsed()) {
            code = run_decompose(decompose_what, a, sink);
        } else if (count_cmd->parsed()) {
            code = run_count(count_what, a, sink);
        } else if (verify_cmd->parsed()) {
            code = run_verify(verify_name, a, sink);
        } else if (selftest_cmd->parsed()) {
            std::vector<SelfCheck> checks = run_selftest();
            bool all = true;
            for (const SelfCheck& c : checks) {
                sink.text(std::string(c.pass ? "ok   " : "FAIL ") + c.name);
                if (sink.json)
                    sink.reports.push_back({{"name", c.name}, {"pass", c.pass}});
                all = all && c.pass;
            }
            code = all ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    sink.flush();
    return code;
}

}  // namespace specht
