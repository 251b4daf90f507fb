// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "abelcode/cli.hpp"
#include "abelcode/control.hpp"
#include "abelcode/convolutional.hpp"
#include "abelcode/duality.hpp"
#include "abelcode/observe.hpp"
#include "abelcode/oracle.hpp"
#include "abelcode/structure.hpp"
#include "support.hpp"

using namespace abelcode;
using namespace abelcode::test;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
    std::size_t cases = 0;
    std::size_t failures = 0;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        ++failures;
        pass = false;
        if (detail.empty()) detail = "first failure: " + what;
    }
};

SequenceSpace binary(std::size_t n) { return SequenceSpace::uniform(FiniteAbelianGroup({2}), n); }

// Desk-scale block corpus: every subgroup of four small ambients plus random larger spaces.
struct Corpus {
    std::vector<BlockCode> exhaustive;
    std::vector<BlockCode> random;
};

const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus out;
        const std::vector<SequenceSpace> ambients{
            binary(4),
            SequenceSpace::uniform(FiniteAbelianGroup({4}), 2),
            SequenceSpace({FiniteAbelianGroup({2}), FiniteAbelianGroup({4})}),
            SequenceSpace::uniform(FiniteAbelianGroup({2, 3}), 2),
        };
        for (const auto& space : ambients)
            for (const auto& gens : oracle::all_subgroups(space)) out.exhaustive.push_back(code_from_generators(space, gens));

        std::mt19937_64 rng(4004);
        while (out.random.size() < 300) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
            std::vector<FiniteAbelianGroup> symbols;
            Int size = 1;
            for (std::size_t i = 0; i < n; ++i) {
                symbols.emplace_back(random_moduli(rng, 12, 2));
                size *= symbols.back().cardinality();
            }
            // strictly larger than the exhaustive ambients, still enumerable
            if (size <= 36 || size > 1024) continue;
            const SequenceSpace space(symbols);
            out.random.push_back(code_from_generators(space, random_rows(rng, space.flat().moduli())));
        }
        return out;
    }();
    return c;
}

template <typename F>
void for_corpus(F&& f) {
    for (const auto& code : corpus().exhaustive) f(code);
    for (const auto& code : corpus().random) f(code);
}

std::vector<oracle::Claim> claims_of(const Decomposition& d) {
    std::vector<oracle::Claim> out;
    for (const auto& g : d.generators) out.push_back({g.element, g.begin, g.end});
    return out;
}

Verdict duality_exactness() {
    Verdict v;
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 500; ++trial) {
        const Vector m = random_moduli(rng, 4096);
        const FiniteAbelianGroup g(m);
        const Subgroup h(g, random_rows(rng, m, 4));
        const Subgroup perp = annihilator(h);
        const std::string at = "G = " + g.to_string() + ", trial " + std::to_string(trial);
        v.expect(h.cardinality() * perp.cardinality() == g.cardinality(), "|H||H^perp| != |G| at " + at);
        v.expect(annihilator(perp) == h, "double annihilator differs at " + at);
    }
    return v;
}

Verdict quotient_duality() {
    Verdict v;
    std::mt19937_64 rng(1002);
    for (int trial = 0; trial < 200; ++trial) {
        const Vector m = random_moduli(rng, 4096);
        const FiniteAbelianGroup g(m);
        const auto rgens = random_rows(rng, m, 4);
        const Subgroup r(g, rgens);
        std::vector<Vector> sgens;
        for (const auto& x : rgens) sgens.push_back(g.scale(std::uniform_int_distribution<Int>(0, 6)(rng), x));
        const Subgroup s(g, sgens);
        const auto report = quotient_duality_check(s, r);
        v.expect(report.consistent && report.quotient_invariants == report.annihilator_quotient_invariants,
                 "R/S and S^perp/R^perp differ at trial " + std::to_string(trial));
    }
    return v;
}

Verdict golden_pair() {
    Verdict v;
    const BlockCode even = code_from_generators(binary(3), {{1, 1, 0}, {0, 1, 1}});
    const BlockCode rep = code_from_generators(binary(3), {{1, 1, 1}});
    v.expect(dual_block_code(even) == rep, "dual of even-weight is not the repetition code");
    const ControlProfile ce = control_profile(even), cr = control_profile(rep);
    v.expect(ce.lengths == std::vector<std::size_t>{0, 1, 1} && ce.index == 1, "even-weight control profile");
    v.expect(cr.lengths == std::vector<std::size_t>{0, 2, 1} && cr.index == 2, "repetition control profile");
    v.expect(observe_profile(even).index == 2, "even-weight observe index");
    v.expect(observe_profile(rep).index == 1, "repetition observe index");
    for (const BlockCode* c : {&even, &rep}) {
        const auto e = oracle::enumerate(*c);
        v.expect(oracle::control_lengths(e) == control_profile(*c).lengths, "oracle control lengths");
        v.expect(oracle::control_index(e) == control_profile(*c).index, "oracle control index");
        v.expect(oracle::observe_index(e) == observe_profile(*c).index, "oracle observe index");
        const DualityReport report = check_control_observe_duality(*c);
        v.expect(report.passed(), "duality report: " + report.first_failure());
    }
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::size_t index = 0;
    for_corpus([&](const BlockCode& code) {
        const std::string at = "corpus code " + std::to_string(index++);
        const auto e = oracle::enumerate(code);
        const std::size_t n = code.horizon();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l <= n; ++l) {
                v.expect(oracle::same_elements(reachable_set(code, k, l), oracle::reachable_set(e, k, l)),
                         "reachable_set at " + at);
                v.expect(oracle::same_elements(consistency_set(code, k, l), oracle::consistency_set(e, k, l)),
                         "consistency_set at " + at);
            }
        v.expect(order_profile(code).bounds == oracle::order_profile(e), "order_profile at " + at);
        v.expect(oracle::same_elements(dual_block_code(code), oracle::annihilator(e)), "annihilator at " + at);
        const Decomposition d = cyclic_product_decomposition(code);
        v.expect(verify_decomposition(code, d).valid == oracle::is_direct_decomposition(e, claims_of(d)),
                 "decomposition verification at " + at);
        if (d.generators.size() >= 2) {
            Decomposition dup = d;
            dup.generators.back() = dup.generators.front();
            v.expect(verify_decomposition(code, dup).valid == oracle::is_direct_decomposition(e, claims_of(dup)),
                     "perturbed decomposition verification at " + at);
        }
    });
    return v;
}

Verdict weak_rectangularity() {
    Verdict v;
    std::size_t index = 0;
    for_corpus([&](const BlockCode& code) {
        const std::string at = "corpus code " + std::to_string(index++);
        if (code.cardinality() > 4096 || !order_profile(code).uniform_margin) return;
        try {
            const Decomposition d = cyclic_product_decomposition(code);
            const Certificate cert = verify_decomposition(code, d);
            Int product = 1;
            for (const auto& g : d.generators) product *= g.order;
            v.expect(cert.valid && product == code.cardinality(), at + ": " + cert.first_failure);
        } catch (const DecompositionFailure& e) {
            v.expect(false, at + ": " + e.what());
        }
    });
    return v;
}

Verdict coprime_rectangularity() {
    Verdict v;
    std::mt19937_64 rng(1006);
    const std::vector<std::vector<Vector>> families{
        {{2}, {3}, {5}}, {{4}, {3}, {5}}, {{2, 2}, {9}, {5}}, {{8}, {3, 3}, {7}}, {{2, 4}, {3}, {25}}, {{6}, {5}, {7}},
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto& family = families[std::uniform_int_distribution<std::size_t>(0, families.size() - 1)(rng)];
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, family.size())(rng);
        std::vector<FiniteAbelianGroup> symbols;
        for (std::size_t i = 0; i < n; ++i) symbols.emplace_back(family[i]);
        const SequenceSpace space(symbols);
        const BlockCode code = code_from_generators(space, random_rows(rng, space.flat().moduli(), 4));
        const std::string at = "trial " + std::to_string(trial);
        try {
            const auto rect = coprime_rectangular(code);
            v.expect(rect.has_value(), "hypothesis rejected at " + at);
            if (!rect) continue;
            std::vector<Vector> gens;
            for (std::size_t i = 0; i < n; ++i)
                for (const auto& g : rect->factors[i].generators()) gens.push_back(space.pad(g, i));
            v.expect(code_from_generators(space, gens) == code, "product of projections differs at " + at);
            v.expect(verify_decomposition(code, rect->decomposition).valid, "certificate invalid at " + at);
        } catch (const std::exception& e) {
            v.expect(false, at + ": " + e.what());
        }
    }
    return v;
}

Verdict fhs_equivalence() {
    Verdict v;
    std::mt19937_64 rng(1007);
    const std::vector<FiniteAbelianGroup> symbols{FiniteAbelianGroup({2}), FiniteAbelianGroup({4}),
                                                  FiniteAbelianGroup({2, 2})};
    std::size_t images = 0, kernels = 0, controllable = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Form form = trial % 2 ? Form::Kernel : Form::Image;
        const FiniteAbelianGroup& g = symbols[static_cast<std::size_t>(trial / 2) % symbols.size()];
        std::vector<Tap> taps(std::uniform_int_distribution<std::size_t>(1, 2)(rng));
        for (auto& tap : taps) {
            tap.resize(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
            for (auto& entry : tap) entry = random_element(rng, g.moduli());
        }
        const ConvolutionalCode conv(g, form, taps);
        const bool weak = weak_controllability(conv).holds;
        const StrongIndex strong = strong_controllability_index(conv);
        const bool finite = strong.status == StrongIndex::Status::Index;
        v.expect(weak == finite && strong.status != StrongIndex::Status::Unknown,
                 "trial " + std::to_string(trial) + ": weak " + (weak ? "holds" : "fails") + ", strong " + strong.to_string());
        (form == Form::Image ? images : kernels)++;
        controllable += weak;
    }
    const ConvolutionalCode constant(FiniteAbelianGroup({2}), Form::Kernel, {{{1}, {1}}});
    const WeakVerdict w = weak_controllability(constant);
    v.expect(!w.holds && w.witness == 1, "constant code witness");
    v.expect(images >= 50 && kernels >= 50, "corpus too small");
    v.detail = std::to_string(images) + " image, " + std::to_string(kernels) + " kernel, " +
               std::to_string(controllable) + " weakly controllable" + (v.detail.empty() ? "" : "; " + v.detail);
    return v;
}

Verdict duality_instances() {
    Verdict v;
    std::size_t index = 0;
    for_corpus([&](const BlockCode& code) {
        const DualityReport report = check_control_observe_duality(code);
        v.expect(report.passed(), "corpus code " + std::to_string(index) + ": " + report.first_failure());
        ++index;
    });
    return v;
}

std::string capture(const std::string& command) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    return out;
}

Verdict determinism() {
    Verdict v;
    const std::vector<std::string> names{"even_weight",   "repetition",    "diagonal_z2", "z6_diagonal", "z2_z3_coprime",
                                         "mixed_symbols", "constant_code", "image_11",    "z4_image_21"};
    for (const auto& name : names) {
        for (const char* format : {"text", "json"}) {
            const std::string cmd = std::string(ABELCODE_TOOL) + " analyze --format " + format + " " +
                                    ABELCODE_SAMPLES_DIR + "/" + name + ".json 2>&1";
            const std::string first = capture(cmd), second = capture(cmd);
            v.expect(!first.empty() && first == second && first.find("error") == std::string::npos,
                     name + " (" + format + ")");
        }
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"duality exactness (500 random subgroups)", duality_exactness},
        {"quotient duality (200 random chains)", quotient_duality},
        {"golden dual pair", golden_pair},
        {"oracle equivalence on the block corpus", oracle_equivalence},
        {"certified cyclic decomposition on the corpus", weak_rectangularity},
        {"coprime rectangularity (200 random codes)", coprime_rectangularity},
        {"weak/strong controllability equivalence", fhs_equivalence},
        {"control/observe duality reports on the corpus", duality_instances},
        {"deterministic analyze reports", determinism},
    };
    std::cout << "block corpus: " << corpus().exhaustive.size() << " exhaustive, " << corpus().random.size()
              << " random\n";
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all &= v.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
                  << v.cases - v.failures << "/" << v.cases << " checks, " << timing << ")"
                  << (v.detail.empty() ? "" : "; " + v.detail) << "\n";
    }
    return all ? 0 : 1;
}
