#include "bh/fnspec.hpp"

#include "bh/json_io.hpp"
#include "bh/products.hpp"
#include "bh/slow.hpp"

#include <fstream>

namespace bh {

namespace {

struct FieldCursor {
    const std::string& text;
    std::size_t pos;

    // Consumes "key=", already positioned at it.
    void expect_key(const std::string& key) {
        if (text.compare(pos, key.size() + 1, key + "=") != 0)
            throw FnSpecError("expected '" + key + "='", pos);
        pos += key.size() + 1;
    }

    // Value ending at the given separator (not consumed) or end of string.
    std::string take_until(char sep) {
        std::size_t end = text.find(sep, pos);
        if (end == std::string::npos) end = text.size();
        std::string out = text.substr(pos, end - pos);
        pos = end;
        return out;
    }

    std::string take_rest() {
        std::string out = text.substr(pos);
        pos = text.size();
        return out;
    }

    // A possibly parenthesized nested spec; when unparenthesized, runs until
    // ";<next_key>=" or (if next_key is empty) to the end of the string.
    std::string take_spec(const std::string& next_key) {
        if (pos < text.size() && text[pos] == '(') {
            int depth = 0;
            std::size_t i = pos;
            for (; i < text.size(); ++i) {
                if (text[i] == '(') ++depth;
                if (text[i] == ')' && --depth == 0) break;
            }
            if (depth != 0) throw FnSpecError("unbalanced parentheses", pos);
            std::string out = text.substr(pos + 1, i - pos - 1);
            pos = i + 1;
            return out;
        }
        if (next_key.empty()) return take_rest();
        std::string marker = ";" + next_key + "=";
        std::size_t end = text.find(marker, pos);
        if (end == std::string::npos)
            throw FnSpecError("expected '" + marker + "' after nested spec", pos);
        std::string out = text.substr(pos, end - pos);
        pos = end;
        return out;
    }

    void expect_sep() { expect_char(';'); }

    void expect_char(char c) {
        if (pos >= text.size() || text[pos] != c)
            throw FnSpecError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    bool at_end() const { return pos >= text.size(); }

    void expect_end() {
        if (!at_end()) throw FnSpecError("trailing input", pos);
    }
};

Rational parse_rational_at(const std::string& s, std::size_t pos_hint) {
    auto r = Rational::parse(s);
    if (!r) throw FnSpecError("bad rational '" + s + "'", pos_hint);
    return *r;
}

int parse_int_at(const std::string& s, std::size_t pos_hint) {
    if (s.empty()) throw FnSpecError("expected an integer", pos_hint);
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw FnSpecError("bad integer '" + s + "'", pos_hint);
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw FnSpecError("integer too large", pos_hint);
    }
    return v;
}

std::vector<Rational> parse_rational_list(const std::string& s, std::size_t pos_hint) {
    std::vector<Rational> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        out.push_back(parse_rational_at(tok, pos_hint + start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

const ProductStructure& product_of(const GradedGraph& g, std::size_t pos) {
    if (!g.product())
        throw FnSpecError("graph '" + g.name() + "' is not a product graph", pos);
    return *g.product();
}

ThomaParams parse_thoma_fields(FieldCursor& cur) {
    ThomaParams params;
    cur.expect_key("a");
    std::size_t a_pos = cur.pos;
    params.alpha = parse_rational_list(cur.take_until(';'), a_pos);
    if (!cur.at_end()) {
        cur.expect_sep();
        cur.expect_key("b");
        std::size_t b_pos = cur.pos;
        params.beta = parse_rational_list(cur.take_until(';'), b_pos);
    }
    return params;
}

}  // namespace

FnPtr load_table_fn(const std::string& path, GraphPtr graph) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file '" + path + "'");
    Json j;
    in >> j;
    TableSpec table;
    for (const auto& [label, value] : j.at("values").items()) {
        VertexId v = graph->vertex(label);
        auto parsed = ExtValue::parse(value.get<std::string>());
        if (!parsed)
            throw std::invalid_argument("bad value '" + value.get<std::string>() +
                                        "' for vertex '" + label + "'");
        table.values[{v.level, v.index}] = *parsed;
    }
    return make_table_fn(std::move(graph), std::move(table), "table:" + path);
}

FnPtr parse_fnspec(const std::string& spec, GraphPtr graph) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw FnSpecError("expected '<family>:<fields>'", 0);
    std::string family = spec.substr(0, colon);
    FieldCursor cur{spec, colon + 1};

    if (family == "table") {
        return load_table_fn(cur.take_rest(), std::move(graph));
    }
    if (family == "thoma") {
        ThomaParams params = parse_thoma_fields(cur);
        cur.expect_end();
        try {
            return make_thoma_fn(std::move(graph), std::move(params));
        } catch (const std::invalid_argument& e) {
            throw FnSpecError(e.what(), colon + 1);
        }
    }
    if (family == "flange") {
        FlangeSpec fspec;
        cur.expect_key("k");
        fspec.k = parse_int_at(cur.take_until(','), cur.pos);
        cur.expect_char(',');
        cur.expect_key("l");
        fspec.l = parse_int_at(cur.take_until(','), cur.pos);
        cur.expect_char(',');
        cur.expect_key("nu");
        std::size_t nu_pos = cur.pos;
        auto nu = Partition::parse(cur.take_until(';'));
        if (!nu) throw FnSpecError("bad partition for nu", nu_pos);
        fspec.nu = *nu;
        cur.expect_sep();
        fspec.params = parse_thoma_fields(cur);
        if (!cur.at_end()) {
            cur.expect_sep();
            cur.expect_key("c");
            fspec.scale = parse_rational_at(cur.take_rest(), cur.pos);
        }
        try {
            return make_flange_fn(std::move(graph), std::move(fspec));
        } catch (const std::invalid_argument& e) {
            throw FnSpecError(e.what(), colon + 1);
        }
    }
    if (family == "product") {
        const auto& prod = product_of(*graph, 0);
        ProductSpec pspec;
        pspec.kase = ProductCase::case1;
        cur.expect_key("w1");
        pspec.w1 = parse_rational_at(cur.take_until(';'), cur.pos);
        cur.expect_sep();
        cur.expect_key("f1");
        pspec.f1 = parse_fnspec(cur.take_spec("f2"), prod.g1);
        cur.expect_sep();
        cur.expect_key("f2");
        pspec.f2 = parse_fnspec(cur.take_spec(""), prod.g2);
        cur.expect_end();
        return make_product_fn(std::move(pspec), std::move(graph));
    }
    if (family == "prod-case2") {
        const auto& prod = product_of(*graph, 0);
        ProductSpec pspec;
        pspec.kase = ProductCase::case2;
        cur.expect_key("f1");
        pspec.f1 = parse_fnspec(cur.take_spec("nu2"), prod.g1);
        cur.expect_sep();
        cur.expect_key("nu2");
        pspec.nu2 = prod.g2->vertex(cur.take_rest());
        return make_product_fn(std::move(pspec), std::move(graph));
    }
    if (family == "prod-case3") {
        const auto& prod = product_of(*graph, 0);
        ProductSpec pspec;
        pspec.kase = ProductCase::case3;
        cur.expect_key("nu1");
        pspec.nu1 = prod.g1->vertex(cur.take_until(';'));
        cur.expect_sep();
        cur.expect_key("f2");
        pspec.f2 = parse_fnspec(cur.take_spec(""), prod.g2);
        return make_product_fn(std::move(pspec), std::move(graph));
    }
    if (family == "slow") {
        const auto& prod = product_of(*graph, 0);
        SlowSpec sspec;
        sspec.family = SlowFamily::fin_case1;
        cur.expect_key("w");
        sspec.w = parse_rational_at(cur.take_until(';'), cur.pos);
        cur.expect_sep();
        cur.expect_key("f");
        sspec.inner = parse_fnspec(cur.take_spec(""), prod.g2);
        return make_slow_fn(std::move(sspec), std::move(graph));
    }
    if (family == "slow-fin2") {
        cur.expect_end();
        SlowSpec sspec;
        sspec.family = SlowFamily::fin_case2;
        return make_slow_fn(std::move(sspec), std::move(graph));
    }
    if (family == "slow-case2") {
        const auto& prod = product_of(*graph, 0);
        SlowSpec sspec;
        sspec.family = SlowFamily::semifin2;
        cur.expect_key("nu");
        sspec.nu = prod.g2->vertex(cur.take_until(';'));
        cur.expect_sep();
        cur.expect_key("c");
        sspec.c = parse_rational_at(cur.take_rest(), cur.pos);
        return make_slow_fn(std::move(sspec), std::move(graph));
    }
    if (family == "slow-case3") {
        const auto& prod = product_of(*graph, 0);
        SlowSpec sspec;
        sspec.family = SlowFamily::semifin3;
        cur.expect_key("m");
        sspec.m = parse_int_at(cur.take_until(';'), cur.pos);
        cur.expect_sep();
        cur.expect_key("f");
        sspec.inner = parse_fnspec(cur.take_spec(""), prod.g2);
        return make_slow_fn(std::move(sspec), std::move(graph));
    }
    throw FnSpecError("unknown function family '" + family + "'", 0);
}

}  // namespace bh
