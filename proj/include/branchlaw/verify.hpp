#pragma once

// Exhaustive small-instance cross-validation: every corank-1 pair over a
// finite alphabet is run through both deciders and the invariant checks, and
// the duality suite exercises the multisegment involution. Reports are
// deterministic for a fixed config (instance order is canonical) and any
// failure carries a minimized counterexample.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "arthur.hpp"
#include "enumerate.hpp"
#include "involution.hpp"
#include "json_io.hpp"
#include "recursion.hpp"
#include "relevance.hpp"
#include "text.hpp"
#include "weak_relevance.hpp"

namespace branchlaw::verify {

struct EnumerationConfig {
    std::int64_t max_big_dim = 6;
    int num_lines = 2;
    std::vector<int> line_ranks = {1, 1};
    Rat window_lo{-1};
    Rat window_hi{1};
    std::vector<Rat> factor_twists = {Rat(0)};
    // Empty means all of: equivalence, necessity, duality, augment,
    // accelerator. A non-empty set restricts to the named checks.
    std::set<std::string> checks;
    int parallelism = 1;
    bool include_golden = true;

    bool runs(const char* check) const { return checks.empty() || checks.count(check); }
};

// Line 1 is the self-dual trivial-character line; every further line i gets
// a distinct partner line named i^ so dualization leaves the alphabet.
inline FactorAlphabet make_alphabet(const EnumerationConfig& cfg) {
    FactorAlphabet a;
    for (int i = 0; i < cfg.num_lines; ++i) {
        const std::string name = std::to_string(i + 1);
        const int rank = i < static_cast<int>(cfg.line_ranks.size()) ? cfg.line_ranks[i] : 1;
        if (i == 0)
            a.lines.push_back(CuspidalSymbol(name, rank));
        else
            a.lines.push_back(CuspidalSymbol(name, rank, name + "^"));
    }
    a.twists = cfg.factor_twists;
    a.window_lo = cfg.window_lo;
    a.window_hi = cfg.window_hi;
    return a;
}

struct InstanceRecord {
    std::size_t index = 0;
    std::string m_text;
    std::string n_text;
    bool matcher_answer = false;
    bool recursive_answer = false;
    bool weakly_relevant = false;
    bool agree = true;
    bool necessity_ok = true;
    bool duality_ok = true;
    bool augment_ok = true;
    bool accelerator_ok = true;
    bool golden = false;
    std::string error;           // nonempty when the worker threw
    std::string shrunk_m;        // minimized counterexample on failure
    std::string shrunk_n;

    bool ok() const {
        return error.empty() && agree && necessity_ok && duality_ok && augment_ok &&
               accelerator_ok;
    }
};

struct EnumerationReport {
    std::vector<InstanceRecord> records;
    std::size_t total = 0;
    std::size_t relevant_count = 0;
    std::size_t disagreements = 0;
    std::size_t necessity_violations = 0;
    std::size_t duality_violations = 0;
    std::size_t augment_violations = 0;
    std::size_t accelerator_mismatches = 0;
    std::size_t errors = 0;
    bool golden_ok = true;
    std::int64_t wall_ms = 0;

    bool all_ok() const {
        return disagreements == 0 && necessity_violations == 0 &&
               duality_violations == 0 && augment_violations == 0 &&
               accelerator_mismatches == 0 && errors == 0 && golden_ok;
    }
};

// Smallest sub-pair (by repeated removal of equal-dimension factor pairs)
// on which the failure predicate still holds.
inline std::pair<ArthurTypeRep, ArthurTypeRep> shrink_disagreement(
    ArthurTypeRep m, ArthurTypeRep n,
    const std::function<bool(const ArthurTypeRep&, const ArthurTypeRep&)>& still_bad) {
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        for (const SpehRep& f : m.factors()) {
            for (const SpehRep& g : n.factors()) {
                if (f.dimension() != g.dimension()) continue;
                ArthurTypeRep m2 = m, n2 = n;
                m2.remove_one(f);
                n2.remove_one(g);
                bool bad = false;
                try {
                    bad = still_bad(m2, n2);
                } catch (const std::exception&) {
                    bad = false;
                }
                if (bad) {
                    m = std::move(m2);
                    n = std::move(n2);
                    shrunk = true;
                    break;
                }
            }
            if (shrunk) break;
        }
    }
    return {std::move(m), std::move(n)};
}

namespace detail {

inline ArthurTypeRep golden_big() {
    const CuspidalSymbol one("1", 1);
    ArthurTypeRep m;
    m.add(SpehRep(one, 1, 3));
    m.add(SpehRep(one, 1, 1));
    m.add(SpehRep(one, 1, 1));
    return m;
}

inline ArthurTypeRep golden_small() {
    const CuspidalSymbol one("1", 1);
    ArthurTypeRep n;
    n.add(SpehRep(one, 1, 2));
    n.add(SpehRep(one, 2, 1));
    return n;
}

inline bool is_golden_witness(const RelevanceWitness& w) {
    const CuspidalSymbol one("1", 1);
    return w.p_pairs.size() == 1 && w.q_pairs.empty() &&
           w.p_pairs[0].first == SpehRep(one, 1, 3) &&
           w.p_pairs[0].second == SpehRep(one, 1, 2) &&
           w.free_m == std::vector<SpehRep>{SpehRep(one, 1, 1), SpehRep(one, 1, 1)} &&
           w.free_n == std::vector<SpehRep>{SpehRep(one, 2, 1)};
}

inline void run_instance(const EnumerationConfig& cfg, const ArthurTypeRep& m,
                         const ArthurTypeRep& n, InstanceRecord& rec) {
    rec.m_text = text::print(m);
    rec.n_text = text::print(n);
    const auto witness = relevant(m, n);
    rec.matcher_answer = witness.has_value();
    if (witness && !validate_witness(*witness, m, n)) {
        rec.error = "matcher witness failed re-validation";
        return;
    }
    if (cfg.runs("equivalence")) {
        rec.recursive_answer = decide_recursive(m, n).relevant;
        rec.agree = rec.matcher_answer == rec.recursive_answer;
        if (!rec.agree) {
            auto [sm, sn] = shrink_disagreement(
                m, n, [](const ArthurTypeRep& a, const ArthurTypeRep& b) {
                    return relevant(a, b).has_value() != decide_recursive(a, b).relevant;
                });
            rec.shrunk_m = text::print(sm);
            rec.shrunk_n = text::print(sn);
        }
    } else {
        rec.recursive_answer = rec.matcher_answer;
    }
    if (cfg.runs("necessity")) {
        rec.weakly_relevant =
            weakly_relevant(zelevinsky_union(m), zelevinsky_union(n)).has_value();
        rec.necessity_ok = !rec.matcher_answer || rec.weakly_relevant;
    }
    if (cfg.runs("duality"))
        rec.duality_ok =
            relevant(dualize(m), dualize(n)).has_value() == rec.matcher_answer;
    if (cfg.runs("augment")) {
        const SpehRep fresh(mint_fresh_symbol(1, m, n), 1, 1);
        ArthurTypeRep bigger_m = m, bigger_n = n;
        bigger_m.add(fresh);
        bigger_n.add(fresh);
        rec.augment_ok =
            relevant(bigger_m, n).has_value() == rec.matcher_answer &&
            relevant(m, bigger_n).has_value() == rec.matcher_answer;
    }
    if (cfg.runs("accelerator")) {
        const auto fast = relevant_fast(m, n);
        rec.accelerator_ok = fast.has_value() == rec.matcher_answer &&
                             (!fast || validate_witness(*fast, m, n));
    }
}

}  // namespace detail

inline EnumerationReport run_equivalence_suite(const EnumerationConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const FactorAlphabet alphabet = make_alphabet(cfg);

    std::vector<std::vector<ArthurTypeRep>> by_dim;
    for (std::int64_t d = 0; d <= cfg.max_big_dim; ++d)
        by_dim.push_back(enumerate_arthur_reps(d, alphabet));

    std::vector<std::pair<const ArthurTypeRep*, const ArthurTypeRep*>> pairs;
    for (std::int64_t d = 1; d <= cfg.max_big_dim; ++d)
        for (const ArthurTypeRep& m : by_dim[static_cast<std::size_t>(d)])
            for (const ArthurTypeRep& n : by_dim[static_cast<std::size_t>(d - 1)])
                pairs.emplace_back(&m, &n);

    EnumerationReport report;
    report.records.resize(pairs.size() + (cfg.include_golden ? 1 : 0));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            InstanceRecord& rec = report.records[i];
            rec.index = i;
            try {
                detail::run_instance(cfg, *pairs[i].first, *pairs[i].second, rec);
            } catch (const std::exception& e) {
                rec.error = e.what();
            }
        }
    };
    const int jobs = cfg.parallelism > 1 ? cfg.parallelism : 1;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    if (cfg.include_golden) {
        InstanceRecord& rec = report.records.back();
        rec.index = pairs.size();
        rec.golden = true;
        const ArthurTypeRep gm = detail::golden_big();
        const ArthurTypeRep gn = detail::golden_small();
        try {
            detail::run_instance(cfg, gm, gn, rec);
            const auto witness = relevant(gm, gn);
            report.golden_ok = rec.matcher_answer && decide_recursive(gm, gn).relevant &&
                               witness && detail::is_golden_witness(*witness);
        } catch (const std::exception& e) {
            rec.error = e.what();
            report.golden_ok = false;
        }
    }

    for (const InstanceRecord& rec : report.records) {
        ++report.total;
        if (rec.matcher_answer) ++report.relevant_count;
        if (!rec.agree) ++report.disagreements;
        if (!rec.necessity_ok) ++report.necessity_violations;
        if (!rec.duality_ok) ++report.duality_violations;
        if (!rec.augment_ok) ++report.augment_violations;
        if (!rec.accelerator_ok) ++report.accelerator_mismatches;
        if (!rec.error.empty()) ++report.errors;
    }
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

// ----- involution suite ----------------------------------------------------

struct InvolutionConfig {
    int exponent_lo = 0;
    int exponent_hi = 4;
    std::int64_t max_support = 6;
    int speh_max = 4;
    int tie_trials = 1000;
    unsigned seed = 20260816;
};

struct InvolutionReport {
    std::size_t multisegments_checked = 0;
    std::size_t involution_failures = 0;
    std::size_t support_failures = 0;
    std::size_t speh_identities = 0;
    std::size_t speh_failures = 0;
    std::size_t tie_trials = 0;
    std::size_t tie_failures = 0;
    std::vector<std::string> failure_samples;
    std::int64_t wall_ms = 0;

    bool all_ok() const {
        return involution_failures == 0 && support_failures == 0 && speh_failures == 0 &&
               tie_failures == 0;
    }
};

namespace detail {

inline void all_multisegments_upto(const std::vector<Segment>& segs, std::size_t first,
                                   std::int64_t budget, Multisegment& acc,
                                   const std::function<void(const Multisegment&)>& sink) {
    sink(acc);
    for (std::size_t i = first; i < segs.size(); ++i) {
        if (segs[i].length() > budget) continue;
        acc.add(segs[i]);
        all_multisegments_upto(segs, i, budget - segs[i].length(), acc, sink);
        acc.remove_one(segs[i]);
    }
}

}  // namespace detail

inline InvolutionReport run_involution_suite(const InvolutionConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    InvolutionReport report;
    const CuspidalSymbol one("1", 1);

    auto note_failure = [&](const std::string& what) {
        if (report.failure_samples.size() < 10) report.failure_samples.push_back(what);
    };

    std::vector<Segment> segs;
    for (int a = cfg.exponent_lo; a <= cfg.exponent_hi; ++a)
        for (int b = a; b <= cfg.exponent_hi; ++b)
            segs.push_back(Segment(one, Rat(a), Rat(b)));

    std::vector<Multisegment> pool;
    Multisegment acc;
    detail::all_multisegments_upto(segs, 0, cfg.max_support, acc,
                                   [&](const Multisegment& ms) { pool.push_back(ms); });

    for (const Multisegment& ms : pool) {
        ++report.multisegments_checked;
        const Multisegment dual = zelevinsky_dual(ms);
        if (support(dual) != support(ms)) {
            ++report.support_failures;
            note_failure("support changed under dual: " + text::print(ms));
        }
        if (zelevinsky_dual(dual) != ms) {
            ++report.involution_failures;
            note_failure("dual of dual differs: " + text::print(ms));
        }
    }

    for (int m = 1; m <= cfg.speh_max; ++m)
        for (int d = 1; d <= cfg.speh_max; ++d) {
            ++report.speh_identities;
            const Multisegment lhs = zelevinsky_dual(zelevinsky_data(SpehRep(one, m, d)));
            const Multisegment rhs = zelevinsky_data(SpehRep(one, d, m));
            if (lhs != rhs) {
                ++report.speh_failures;
                note_failure("speh duality failed at m=" + std::to_string(m) +
                             ", d=" + std::to_string(d));
            }
        }

    std::mt19937 rng(cfg.seed);
    for (int t = 0; t < cfg.tie_trials; ++t) {
        ++report.tie_trials;
        const Multisegment& ms = pool[rng() % pool.size()];
        TieBreaker tie = [&rng](std::size_t pool_size) -> std::size_t {
            return rng() % pool_size;
        };
        if (zelevinsky_dual(ms, tie) != zelevinsky_dual(ms)) {
            ++report.tie_failures;
            note_failure("tie-break dependence on: " + text::print(ms));
        }
    }

    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

// ----- report serialization ------------------------------------------------

inline jsonio::Json to_json(const InstanceRecord& rec) {
    jsonio::JsonObject o;
    o["index"] = static_cast<std::int64_t>(rec.index);
    o["m"] = rec.m_text;
    o["n"] = rec.n_text;
    o["matcher_answer"] = rec.matcher_answer;
    o["recursive_answer"] = rec.recursive_answer;
    o["weakly_relevant"] = rec.weakly_relevant;
    o["agree"] = rec.agree;
    o["necessity_ok"] = rec.necessity_ok;
    o["duality_ok"] = rec.duality_ok;
    o["augment_ok"] = rec.augment_ok;
    o["accelerator_ok"] = rec.accelerator_ok;
    if (rec.golden) o["golden"] = true;
    if (!rec.error.empty()) o["error"] = rec.error;
    if (!rec.shrunk_m.empty()) {
        o["shrunk_m"] = rec.shrunk_m;
        o["shrunk_n"] = rec.shrunk_n;
    }
    return jsonio::Json(std::move(o));
}

inline jsonio::Json aggregate_json(const EnumerationReport& report) {
    jsonio::JsonObject o;
    o["aggregate"] = true;
    o["total"] = static_cast<std::int64_t>(report.total);
    o["relevant"] = static_cast<std::int64_t>(report.relevant_count);
    o["disagreements"] = static_cast<std::int64_t>(report.disagreements);
    o["necessity_violations"] = static_cast<std::int64_t>(report.necessity_violations);
    o["duality_violations"] = static_cast<std::int64_t>(report.duality_violations);
    o["augment_violations"] = static_cast<std::int64_t>(report.augment_violations);
    o["accelerator_mismatches"] =
        static_cast<std::int64_t>(report.accelerator_mismatches);
    o["errors"] = static_cast<std::int64_t>(report.errors);
    o["golden_ok"] = report.golden_ok;
    o["all_ok"] = report.all_ok();
    o["wall_ms"] = report.wall_ms;
    return jsonio::Json(std::move(o));
}

// One JSON object per instance, aggregate object last.
inline void write_jsonl(const EnumerationReport& report, std::ostream& out) {
    for (const InstanceRecord& rec : report.records) out << to_json(rec).dump() << "\n";
    out << aggregate_json(report).dump() << "\n";
}

inline jsonio::Json to_json(const InvolutionReport& r) {
    jsonio::JsonObject o;
    o["multisegments_checked"] = static_cast<std::int64_t>(r.multisegments_checked);
    o["involution_failures"] = static_cast<std::int64_t>(r.involution_failures);
    o["support_failures"] = static_cast<std::int64_t>(r.support_failures);
    o["speh_identities"] = static_cast<std::int64_t>(r.speh_identities);
    o["speh_failures"] = static_cast<std::int64_t>(r.speh_failures);
    o["tie_trials"] = static_cast<std::int64_t>(r.tie_trials);
    o["tie_failures"] = static_cast<std::int64_t>(r.tie_failures);
    o["all_ok"] = r.all_ok();
    o["wall_ms"] = r.wall_ms;
    return jsonio::Json(std::move(o));
}

}  // namespace branchlaw::verify
