#include "abelcode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelcode/control.hpp"
#include "abelcode/duality.hpp"
#include "abelcode/observe.hpp"
#include "abelcode/oracle.hpp"
#include "abelcode/structure.hpp"

namespace abelcode::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw SpecError("schema violation at " + (path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) schema_error(path, "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        schema_error(path, "integer too large");
    return v.get<Int>();
}

Vector parse_moduli(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) schema_error(path, "expected a non-empty list of moduli");
    Vector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Int m = as_int(v[i], child(path, i));
        if (m < 1) schema_error(child(path, i), "modulus must be at least 1");
        out.push_back(m);
    }
    return out;
}

Int residue(const json& v, Int modulus, const std::string& path) {
    const Int r = as_int(v, path);
    if (r < 0 || r >= modulus)
        throw SpecError("arithmetic violation at " + path + ": residue " + std::to_string(r) +
                        " out of range for modulus " + std::to_string(modulus));
    return r;
}

// A symbol entry: a bare residue for rank-one symbols, otherwise a list of residues.
Vector parse_entry(const json& v, const Vector& moduli, const std::string& path) {
    if (moduli.size() == 1 && !v.is_array()) return {residue(v, moduli[0], path)};
    if (!v.is_array() || v.size() != moduli.size())
        schema_error(path, "expected " + std::to_string(moduli.size()) + " residue(s)");
    Vector out;
    for (std::size_t j = 0; j < moduli.size(); ++j) out.push_back(residue(v[j], moduli[j], child(path, j)));
    return out;
}

void only_keys(const json& doc, std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : doc.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            schema_error(key, "unknown field");
}

const json& required(const json& doc, const char* key) {
    if (!doc.contains(key)) schema_error(key, "missing required field");
    return doc.at(key);
}

BlockCode parse_block(const json& doc) {
    only_keys(doc, {"kind", "symbols", "generators"});
    const json& symbols = required(doc, "symbols");
    if (!symbols.is_array() || symbols.empty()) schema_error("symbols", "expected a non-empty list of moduli lists");
    std::vector<FiniteAbelianGroup> groups;
    std::vector<Vector> moduli;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        moduli.push_back(parse_moduli(symbols[i], child("symbols", i)));
        groups.emplace_back(moduli.back());
    }
    const json& gens = required(doc, "generators");
    if (!gens.is_array()) schema_error("generators", "expected a list of generators");
    std::vector<Vector> rows;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::string path = child("generators", g);
        if (!gens[g].is_array() || gens[g].size() != moduli.size())
            schema_error(path, "expected " + std::to_string(moduli.size()) + " entries, one per index");
        Vector row;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            const Vector e = parse_entry(gens[g][i], moduli[i], child(path, i));
            row.insert(row.end(), e.begin(), e.end());
        }
        rows.push_back(std::move(row));
    }
    return code_from_generators(SequenceSpace(std::move(groups)), rows);
}

ConvolutionalCode parse_convolutional(const json& doc) {
    only_keys(doc, {"kind", "symbol", "form", "taps", "horizon"});
    const Vector moduli = parse_moduli(required(doc, "symbol"), "symbol");
    const json& form_field = required(doc, "form");
    if (!form_field.is_string()) schema_error("form", "expected \"image\" or \"kernel\"");
    const std::string form_name = form_field.get<std::string>();
    if (form_name != "image" && form_name != "kernel") schema_error("form", "expected \"image\" or \"kernel\"");
    const json& taps_field = required(doc, "taps");
    if (!taps_field.is_array()) schema_error("taps", "expected a list of taps");
    std::vector<Tap> taps;
    for (std::size_t t = 0; t < taps_field.size(); ++t) {
        const std::string path = child("taps", t);
        if (!taps_field[t].is_array() || taps_field[t].empty()) schema_error(path, "expected a non-empty list of entries");
        Tap tap;
        for (std::size_t s = 0; s < taps_field[t].size(); ++s)
            tap.push_back(parse_entry(taps_field[t][s], moduli, child(path, s)));
        taps.push_back(std::move(tap));
    }
    std::size_t horizon = 0;
    if (doc.contains("horizon")) {
        const Int h = as_int(doc.at("horizon"), "horizon");
        if (h < 1) schema_error("horizon", "must be at least 1");
        horizon = static_cast<std::size_t>(h);
    }
    return ConvolutionalCode(FiniteAbelianGroup(moduli), form_name == "image" ? Form::Image : Form::Kernel,
                             std::move(taps), horizon);
}

// ---------------------------------------------------------------- emission

json entry_json(std::span<const Int> e) {
    if (e.size() == 1) return e[0];
    return json(std::vector<Int>(e.begin(), e.end()));
}

json block_generators(const BlockCode& code) {
    const SequenceSpace& space = code.space();
    json rows = json::array();
    for (const auto& g : code.basis()) {
        json row = json::array();
        for (std::size_t i = 0; i < space.horizon(); ++i) row.push_back(entry_json(space.at(g, i)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json symbols_json(const SequenceSpace& space) {
    json out = json::array();
    for (const auto& s : space.symbols()) out.push_back(s.moduli());
    return out;
}

json taps_json(const ConvolutionalCode& conv) {
    json out = json::array();
    for (const auto& tap : conv.taps()) {
        json t = json::array();
        for (const auto& e : tap) t.push_back(entry_json(e));
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------- report helpers

std::string window_text(std::size_t a, std::size_t b) {
    if (a >= b) return "empty";
    return "[" + std::to_string(a) + "," + std::to_string(b) + ") (1-based [" + std::to_string(a + 1) + "," +
           std::to_string(b) + "])";
}

std::string positions_text(std::size_t count) {
    if (count == 0) return "none";
    return "k = 0.." + std::to_string(count - 1) + " (1-based 1.." + std::to_string(count) + ")";
}

bool is_scalar_list(const ordered_json& v) {
    if (!v.is_array()) return v.is_primitive();
    return std::all_of(v.begin(), v.end(), [](const ordered_json& x) { return is_scalar_list(x); });
}

std::string scalar_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_text(const ordered_json& v, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    for (const auto& [key, x] : v.items()) {
        if (x.is_object()) {
            out += pad + key + ":\n";
            render_text(x, indent + 2, out);
        } else if (x.is_array() && !is_scalar_list(x)) {
            out += pad + key + ":\n";
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i].is_object()) {
                    out += pad + "  [" + std::to_string(i) + "]\n";
                    render_text(x[i], indent + 4, out);
                } else {
                    out += pad + "  [" + std::to_string(i) + "] " + scalar_text(x[i]) + "\n";
                }
            }
        } else {
            out += pad + key + ": " + scalar_text(x) + "\n";
        }
    }
}

std::string render(const ordered_json& report, bool as_json) {
    if (as_json) return report.dump(2) + "\n";
    std::string out;
    render_text(report, 0, out);
    return out;
}

ordered_json verdict_json(const WeakVerdict& v) {
    ordered_json out;
    out["holds"] = v.holds;
    out["horizon"] = v.horizon;
    if (!v.holds) {
        out["witness"] = "n = " + std::to_string(v.witness) + ", window " + window_text(0, v.witness);
        out["witness_n"] = v.witness;
        out["larger_size"] = v.larger_size;
        out["smaller_size"] = v.smaller_size;
    }
    return out;
}

ordered_json strong_json(const StrongIndex& s) {
    ordered_json out;
    out["status"] = s.status == StrongIndex::Status::Index ? "index " + s.to_string() : s.to_string();
    out["finite"] = s.status == StrongIndex::Status::Index;
    if (s.status == StrongIndex::Status::Index) out["index"] = s.value;
    out["horizon"] = s.horizon;
    return out;
}

std::string format_text(const Vector& v) { return format_vector(v); }

ordered_json head_json(const CodeSpec& spec) {
    ordered_json out;
    if (const auto* block = std::get_if<BlockCode>(&spec)) {
        out["kind"] = "block";
        out["horizon"] = block->horizon();
        out["symbols"] = symbols_json(block->space());
    } else {
        const auto& conv = std::get<ConvolutionalCode>(spec);
        out["kind"] = "convolutional";
        out["symbol"] = conv.symbol().moduli();
        out["form"] = to_string(conv.form());
        out["memory"] = conv.memory();
        out["horizon"] = conv.horizon();
    }
    return out;
}

// ---------------------------------------------------------------- commands

struct Outcome {
    ordered_json report;
    int exit_code = 0;
};

ordered_json control_json(const ControlProfile& p) {
    ordered_json out;
    out["lengths"] = p.lengths;
    out["positions"] = positions_text(p.lengths.size());
    out["index"] = p.index;
    return out;
}

ordered_json observe_json(const ObserveProfile& p) {
    ordered_json out;
    out["lengths"] = p.lengths;
    out["positions"] = positions_text(p.lengths.size());
    out["index"] = p.index;
    return out;
}

Outcome analyze_block(const BlockCode& code) {
    ordered_json r = head_json(code);
    r["cardinality"] = code.cardinality();
    r["invariant_factors"] = invariant_factors_of_code(code);
    r["control_profile"] = control_json(control_profile(code));
    r["observe_profile"] = observe_json(observe_profile(code));
    ordered_json order;
    try {
        const OrderProfile p = order_profile(code);
        order["bounds"] = p.bounds;
        order["positions"] = "l = 0.." + std::to_string(p.bounds.size() - 1) + " (prefix [0,n) = 1-based [1,n])";
        order["margin"] = p.margin;
        order["uniform_margin"] = p.uniform_margin;
    } catch (const std::length_error& e) {
        order["skipped"] = e.what();
    }
    r["order_profile"] = order;
    return {r, 0};
}

Outcome analyze_convolutional(const ConvolutionalCode& conv) {
    ordered_json r = head_json(conv);
    r["margin"] = conv.default_margin();
    std::vector<Int> p, f, fin;
    for (std::size_t n = 1; n <= conv.horizon(); ++n) {
        p.push_back(window_code(conv, n).cardinality());
        f.push_back(closed_window(conv, n).cardinality());
        fin.push_back(finite_projection(conv, n).cardinality());
    }
    ordered_json sizes;
    sizes["n"] = "1.." + std::to_string(conv.horizon()) + " (window [0,n), 1-based [1,n])";
    sizes["window_code"] = p;
    sizes["closed_window"] = f;
    sizes["finite_projection"] = fin;
    r["window_sizes"] = sizes;
    r["weak_controllability"] = verdict_json(weak_controllability(conv));
    r["weak_observability"] = verdict_json(weak_observability(conv));
    r["strong_controllability"] = strong_json(strong_controllability_index(conv));
    return {r, 0};
}

Outcome decompose(const BlockCode& code) {
    ordered_json r = head_json(code);
    r["cardinality"] = code.cardinality();
    const Decomposition d = cyclic_product_decomposition(code);
    ordered_json gens = ordered_json::array();
    for (const auto& g : d.generators) {
        ordered_json y;
        y["element"] = format_text(g.element);
        y["window"] = window_text(g.begin, g.end);
        y["order"] = g.order;
        y["prime"] = g.prime;
        gens.push_back(y);
    }
    r["generators"] = gens;
    r["invariant_factors"] = decomposition_invariants(d);
    const Certificate cert = verify_decomposition(code, d);
    ordered_json c;
    c["valid"] = cert.valid;
    ordered_json entries = ordered_json::array();
    for (const auto& e : cert.entries) {
        ordered_json x;
        x["condition"] = e.condition;
        x["holds"] = e.holds;
        x["detail"] = e.detail;
        entries.push_back(x);
    }
    c["entries"] = entries;
    r["certificate"] = c;
    r["subdirect_product"] = is_subdirect_product(code, d);
    if (auto rect = coprime_rectangular(code)) {
        ordered_json factors = ordered_json::array();
        for (const auto& h : rect->factors) factors.push_back(h.cardinality());
        r["coprime_rectangular"] = "holds, factor orders " + factors.dump();
    } else {
        r["coprime_rectangular"] = "not applicable: symbol orders are not pairwise coprime";
    }
    return {r, cert.valid ? 0 : 1};
}

BlockCode coordinate_product(const BlockCode& code) {
    const SequenceSpace& space = code.space();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < space.horizon(); ++i) {
        const BlockCode factor = window_projection(code, i, i + 1);
        for (const auto& g : factor.basis()) gens.push_back(space.pad(g, i));
    }
    return code_from_generators(space, gens);
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Outcome check(const CodeSpec& spec, const std::string& property, std::optional<std::size_t> l) {
    ordered_json r = head_json(spec);
    r["property"] = property;
    if (l) r["L"] = *l;
    bool holds = false;
    if (const auto* code = std::get_if<BlockCode>(&spec)) {
        if (property == "weak-controllable") {
            holds = true;
            r["note"] = "every block code is weakly controllable at finite horizon";
        } else if (property == "L-controllable") {
            if (!l) throw UsageError("--L is required for L-controllable");
            const ControlProfile p = control_profile(*code);
            r["control_index"] = p.index;
            holds = p.is_l_controllable(*l);
        } else if (property == "observable") {
            const ObserveProfile p = observe_profile(*code);
            r["observe_index"] = p.index;
            holds = !l || p.index <= *l;
        } else if (property == "rectangular") {
            const BlockCode product = coordinate_product(*code);
            r["cardinality"] = code->cardinality();
            r["product_cardinality"] = product.cardinality();
            holds = product == *code;
        } else {
            const Decomposition d = cyclic_product_decomposition(*code);
            r["factors"] = d.generators.size();
            holds = is_subdirect_product(*code, d);
        }
    } else {
        const auto& conv = std::get<ConvolutionalCode>(spec);
        if (property == "weak-controllable") {
            const WeakVerdict v = weak_controllability(conv);
            r["verdict"] = verdict_json(v);
            holds = v.holds;
        } else if (property == "L-controllable") {
            if (!l) throw UsageError("--L is required for L-controllable");
            const StrongIndex s = strong_controllability_index(conv);
            r["strong_controllability"] = strong_json(s);
            holds = s.status == StrongIndex::Status::Index && s.value <= *l;
        } else if (property == "observable") {
            const WeakVerdict v = weak_observability(conv);
            r["verdict"] = verdict_json(v);
            holds = v.holds;
        } else {
            throw UsageError("property " + property + " applies to block codes only");
        }
    }
    r["holds"] = holds;
    return {r, holds ? 0 : 1};
}

Outcome duality_check(const CodeSpec& spec) {
    ordered_json r = head_json(spec);
    bool passed = false;
    if (const auto* code = std::get_if<BlockCode>(&spec)) {
        const DualityReport d = check_control_observe_duality(*code);
        r["dual_cardinality"] = d.dual.cardinality();
        r["control_index"] = d.control.index;
        r["observe_index"] = d.observe.index;
        r["dual_control_index"] = d.dual_control.index;
        r["dual_observe_index"] = d.dual_observe.index;
        const auto windows_ok = std::count_if(d.window_checks.begin(), d.window_checks.end(),
                                              [](const WindowCheck& w) { return w.holds; });
        r["window_annihilators"] = std::to_string(windows_ok) + "/" + std::to_string(d.window_checks.size());
        const auto ann_ok = std::count_if(d.chain_checks.begin(), d.chain_checks.end(),
                                          [](const ChainCheck& c) { return c.annihilator_matches; });
        const auto rev_ok = std::count_if(d.chain_checks.begin(), d.chain_checks.end(),
                                          [](const ChainCheck& c) { return c.chain_reversed; });
        r["chain_annihilators"] = std::to_string(ann_ok) + "/" + std::to_string(d.chain_checks.size());
        r["chain_reversal"] = std::to_string(rev_ok) + "/" + std::to_string(d.chain_checks.size());
        r["subcode_supercode"] = d.subcode_supercode;
        r["subcode_supercode_L"] = "L = 0.." + std::to_string(d.subcode_supercode.size() - 1);
        r["property_equivalence"] = d.property_equivalence;
        r["index_match"] = d.index_match;
        passed = d.passed();
        if (!passed) r["first_failure"] = d.first_failure();
    } else {
        const auto& conv = std::get<ConvolutionalCode>(spec);
        const ConvolutionalDualityReport d = check_convolutional_duality(conv);
        auto tally = [](const std::vector<bool>& v) {
            return std::to_string(std::count(v.begin(), v.end(), true)) + "/" + std::to_string(v.size());
        };
        r["window_annihilators"] = tally(d.window_checks);
        r["finite_annihilators"] = tally(d.finite_checks);
        r["weak_controllability"] = verdict_json(d.controllability);
        r["dual_weak_observability"] = verdict_json(d.dual_observability);
        passed = d.passed();
        if (!passed) r["first_failure"] = d.first_failure();
    }
    r["passed"] = passed;
    return {r, passed ? 0 : 1};
}

struct Tally {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> mismatches;
    void record(bool agree, const std::string& what) {
        ++checked;
        if (!agree && mismatches.size() < 20) mismatches.push_back(what);
        if (!agree) ++failed;
    }
};

Outcome oracle_block(const BlockCode& code) {
    const oracle::EnumeratedCode e = oracle::enumerate(code);
    const std::size_t n = code.horizon();
    Tally t;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l <= n; ++l) {
            const std::string at = "(k=" + std::to_string(k) + ", L=" + std::to_string(l) + ")";
            t.record(oracle::same_elements(reachable_set(code, k, l), oracle::reachable_set(e, k, l)),
                     "reachable_set " + at);
            t.record(oracle::same_elements(consistency_set(code, k, l), oracle::consistency_set(e, k, l)),
                     "consistency_set " + at);
        }
    const ControlProfile cp = control_profile(code);
    t.record(cp.lengths == oracle::control_lengths(e), "control lengths");
    t.record(observe_profile(code).index == oracle::observe_index(e), "observe index");
    try {
        t.record(order_profile(code).bounds == oracle::order_profile(e), "order profile");
    } catch (const std::length_error&) {
    }
    t.record(oracle::same_elements(dual_block_code(code), oracle::annihilator(e)), "annihilator");
    t.record(invariant_factors_of_code(code) == oracle::invariant_factors(e), "invariant factors");
    const Decomposition d = cyclic_product_decomposition(code);
    std::vector<oracle::Claim> claims;
    for (const auto& g : d.generators) claims.push_back({g.element, g.begin, g.end});
    t.record(verify_decomposition(code, d).valid == oracle::is_direct_decomposition(e, claims),
             "decomposition verification");

    ordered_json r = head_json(code);
    r["enumerated"] = e.size();
    r["checks"] = t.checked;
    r["mismatches"] = t.failed;
    if (!t.mismatches.empty()) r["first_mismatches"] = t.mismatches;
    r["agree"] = t.failed == 0;
    return {r, t.failed == 0 ? 0 : 1};
}

// Image windows: span of the shifts starting inside [0, n), truncated to the window.
oracle::EnumeratedCode image_window(const ConvolutionalCode& conv, std::size_t n) {
    const SequenceSpace space = SequenceSpace::uniform(conv.symbol(), n);
    const std::size_t r = conv.symbol().rank();
    std::vector<Vector> gens;
    for (const auto& tap : conv.taps())
        for (std::size_t s = 0; s < n; ++s) {
            Vector v(n * r, 0);
            for (std::size_t t = 0; t < tap.size() && s + t < n; ++t)
                std::copy(tap[t].begin(), tap[t].end(), v.begin() + static_cast<std::ptrdiff_t>((s + t) * r));
            gens.push_back(std::move(v));
        }
    return oracle::enumerate_span(space, gens);
}

Outcome oracle_convolutional(const ConvolutionalCode& conv) {
    Tally t;
    std::size_t largest = 0;
    // four memories already exercise every boundary configuration of the checks
    const std::size_t last = std::min(conv.horizon(), 4 * conv.memory());
    for (std::size_t n = 1; n <= last; ++n) {
        const BlockCode main = window_code(conv, n);
        if (main.cardinality() > oracle::oracle_bound()) break;
        oracle::EnumeratedCode brute;
        try {
            brute = conv.form() == Form::Image ? image_window(conv, n)
                                               : oracle::kernel_window(conv.symbol(), conv.taps(), n, conv.default_margin());
        } catch (const oracle::BoundExceeded&) {
            break;
        }
        t.record(oracle::same_elements(main, brute), "window_code n=" + std::to_string(n));
        largest = n;
    }
    if (largest == 0) throw oracle::BoundExceeded("no window fits the oracle bound");
    ordered_json r = head_json(conv);
    r["windows_checked"] = "n = 1.." + std::to_string(largest);
    r["checks"] = t.checked;
    r["mismatches"] = t.failed;
    if (!t.mismatches.empty()) r["first_mismatches"] = t.mismatches;
    r["agree"] = t.failed == 0;
    return {r, t.failed == 0 ? 0 : 1};
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const BlockCode& need_block(const CodeSpec& spec, const std::string& command) {
    if (const auto* b = std::get_if<BlockCode>(&spec)) return *b;
    throw UsageError(command + " applies to block codes only");
}

}  // namespace

CodeSpec parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string detail = e.what();
        if (auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
        throw SpecError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        detail);
    }
    if (!doc.is_object()) schema_error("", "expected an object");
    const json& kind = required(doc, "kind");
    if (!kind.is_string()) schema_error("kind", "expected \"block\" or \"convolutional\"");
    try {
        if (kind == "block") return parse_block(doc);
        if (kind == "convolutional") return parse_convolutional(doc);
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("schema violation: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw SpecError(std::string("arithmetic violation: ") + e.what());
    }
    schema_error("kind", "expected \"block\" or \"convolutional\"");
}

std::string emit_spec(const CodeSpec& spec) {
    std::vector<std::pair<std::string, json>> fields;
    if (const auto* block = std::get_if<BlockCode>(&spec)) {
        fields = {{"kind", "block"}, {"symbols", symbols_json(block->space())}, {"generators", block_generators(*block)}};
    } else {
        const auto& conv = std::get<ConvolutionalCode>(spec);
        fields = {{"kind", "convolutional"},
                  {"symbol", conv.symbol().moduli()},
                  {"form", to_string(conv.form())},
                  {"taps", taps_json(conv)}};
        if (conv.explicit_horizon()) fields.emplace_back("horizon", conv.horizon());
    }
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i)
        out += "  " + json(fields[i].first).dump() + ": " + fields[i].second.dump() + (i + 1 < fields.size() ? ",\n" : "\n");
    return out + "}\n";
}

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact analysis of group codes over finite abelian groups", "abelcode"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string path;
    std::string property;
    std::optional<std::size_t> l;
    auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", path, "Spec file, or - for stdin")->required(); };
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Cardinality, invariant factors and profiles");
    CLI::App* dual_cmd = app.add_subcommand("dual", "Emit the dual code spec");
    CLI::App* decompose_cmd = app.add_subcommand("decompose", "Certified cyclic decomposition");
    CLI::App* check_cmd = app.add_subcommand("check", "Verdict for a named property");
    CLI::App* duality_cmd = app.add_subcommand("duality-check", "Controllability/observability duality report");
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "Cross-check against brute-force enumeration");
    for (CLI::App* sub : {analyze_cmd, dual_cmd, decompose_cmd, check_cmd, duality_cmd, oracle_cmd}) spec_arg(sub);
    check_cmd->add_option("--property", property, "Property name")
        ->required()
        ->check(CLI::IsMember({"weak-controllable", "L-controllable", "observable", "rectangular", "subdirect"}));
    check_cmd->add_option("-L,--L", l, "Window parameter");

    RunResult result;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    try {
        const CodeSpec spec = parse_spec(read_source(path));
        Outcome o;
        if (dual_cmd->parsed()) {
            CodeSpec dual = std::visit(
                [](const auto& c) -> CodeSpec {
                    if constexpr (std::is_same_v<std::decay_t<decltype(c)>, BlockCode>) return dual_block_code(c);
                    else return dual_convolutional(c);
                },
                spec);
            return {0, emit_spec(dual), ""};
        }
        if (analyze_cmd->parsed())
            o = std::holds_alternative<BlockCode>(spec) ? analyze_block(std::get<BlockCode>(spec))
                                                        : analyze_convolutional(std::get<ConvolutionalCode>(spec));
        else if (decompose_cmd->parsed())
            o = decompose(need_block(spec, "decompose"));
        else if (check_cmd->parsed())
            o = check(spec, property, l);
        else if (duality_cmd->parsed())
            o = duality_check(spec);
        else
            o = std::holds_alternative<BlockCode>(spec) ? oracle_block(std::get<BlockCode>(spec))
                                                        : oracle_convolutional(std::get<ConvolutionalCode>(spec));
        result.exit_code = o.exit_code;
        result.out = render(o.report, format == "json");
    } catch (const SpecError& e) {
        return {2, "", "error: " + std::string(e.what()) + "\n"};
    } catch (const UsageError& e) {
        return {2, "", "error: " + std::string(e.what()) + "\n"};
    } catch (const oracle::BoundExceeded& e) {
        return {2, "", "error: oracle bound exceeded: " + std::string(e.what()) + "\n"};
    } catch (const MarginInsufficient& e) {
        return {2, "", "error: " + std::string(e.what()) + "\n"};
    } catch (const DecompositionFailure& e) {
        return {1, "", "error: " + std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {2, "", "error: " + std::string(e.what()) + "\n"};
    }
    return result;
}

}  // namespace abelcode::cli
