#pragma once

/**
 * @file json_io.hpp
 * @brief JSON with arbitrary-precision integers.
 *
 * nlohmann::json stores numbers in 64 bits. Integers that do not fit are
 * kept in the DOM as a one-key object {"$bigint": "<digits>"}; the parser
 * below produces that form from raw literals and `dump` prints it back as a
 * bare number, so files round-trip exactly.
 */

#include "json.hpp"

#include <cstdint>
#include <limits>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "wonder/arith.hpp"
#include "wonder/errors.hpp"

namespace wonder::json_io {

using json = nlohmann::json;

inline constexpr const char* kBigIntTag = "$bigint";

inline bool is_bigint(const json& j) {
    return j.is_object() && j.size() == 1 && j.contains(kBigIntTag) && j[kBigIntTag].is_string();
}

inline json from_int(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(x));
    return json{{kBigIntTag, x.str()}};
}

inline json from_vec(std::span<const Int> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(from_int(x));
    return a;
}

inline json from_mat(const IntMat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(from_vec(row));
    return a;
}

inline Int to_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
        return Int(j.get<std::int64_t>());
    }
    if (is_bigint(j)) return Int(j[kBigIntTag].get<std::string>());
    throw SchemaError(path, "expected an integer, got " + std::string(j.type_name()) +
                                (j.is_number_float() ? " (non-integer number)" : ""));
}

inline IntVec to_vec(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(to_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline IntMat to_mat(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of integer arrays");
    IntMat m;
    for (std::size_t i = 0; i < j.size(); ++i) m.push_back(to_vec(j[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

namespace detail {

/// DOM builder that keeps over-long integer literals exact.
class BigIntSax : public nlohmann::json_sax<json> {
public:
    explicit BigIntSax(json& root) : root_(root) {}

    bool null() override { return put(json(nullptr)); }
    bool boolean(bool v) override { return put(json(v)); }
    bool number_integer(number_integer_t v) override { return put(json(v)); }
    bool number_unsigned(number_unsigned_t v) override {
        if (v > static_cast<number_unsigned_t>(std::numeric_limits<std::int64_t>::max()))
            return put(json{{kBigIntTag, std::to_string(v)}});
        return put(json(static_cast<std::int64_t>(v)));
    }
    bool number_float(number_float_t v, const string_t& raw) override {
        static const std::regex integer_literal("-?[0-9]+");
        if (std::regex_match(raw, integer_literal)) {
            std::string digits = raw;
            if (digits.size() > 1 && digits[0] == '0') digits.erase(0, digits.find_first_not_of('0'));
            return put(json{{kBigIntTag, digits}});
        }
        return put(json(v));
    }
    bool string(string_t& v) override { return put(json(v)); }
    bool binary(binary_t& v) override { return put(json::binary(v)); }
    bool start_object(std::size_t) override { return open(json::object()); }
    bool key(string_t& k) override {
        if (k == kBigIntTag) throw SchemaError(path(), std::string("reserved key '") + kBigIntTag + "'");
        key_ = k;
        return true;
    }
    bool end_object() override { return close(); }
    bool start_array(std::size_t) override { return open(json::array()); }
    bool end_array() override { return close(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
        throw SchemaError("", "JSON parse error at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    std::string path() const { return key_; }

    bool put(json v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            return true;
        }
        json& top = *stack_.back();
        if (top.is_array())
            top.push_back(std::move(v));
        else {
            if (top.contains(key_)) throw SchemaError(key_, "duplicate key");
            top[key_] = std::move(v);
        }
        return true;
    }
    bool open(json v) {
        if (stack_.empty()) {
            root_ = std::move(v);
            stack_.push_back(&root_);
            return true;
        }
        json& top = *stack_.back();
        if (top.is_array()) {
            top.push_back(std::move(v));
            stack_.push_back(&top.back());
        } else {
            if (top.contains(key_)) throw SchemaError(key_, "duplicate key");
            top[key_] = std::move(v);
            stack_.push_back(&top[key_]);
        }
        return true;
    }
    bool close() {
        stack_.pop_back();
        return true;
    }

    json& root_;
    std::vector<json*> stack_;
    std::string key_;
};

inline void dump_string(std::ostream& os, const std::string& s) { os << json(s).dump(); }

inline void dump_rec(std::ostream& os, const json& j, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    if (is_bigint(j)) {
        os << j[kBigIntTag].get<std::string>();
    } else if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys sorted
            if (!first) os << ',';
            first = false;
            newline(depth + 1);
            dump_string(os, it.key());
            os << (indent < 0 ? ":" : ": ");
            dump_rec(os, it.value(), indent, depth + 1);
        }
        newline(depth);
        os << '}';
    } else if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // short arrays of scalars stay on one line
        bool flat = indent < 0;
        if (!flat) {
            flat = j.size() <= 16;
            for (const auto& x : j)
                if (x.is_structured() && !is_bigint(x)) flat = false;
        }
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << (flat && indent >= 0 ? ", " : ",");
            if (!flat) newline(depth + 1);
            dump_rec(os, j[i], indent, depth + 1);
        }
        if (!flat) newline(depth);
        os << ']';
    } else {
        os << j.dump();
    }
}

} // namespace detail

inline json parse(const std::string& text) {
    json root;
    detail::BigIntSax sax(root);
    json::sax_parse(text, &sax);
    return root;
}

/// Deterministic serialization: sorted keys, big integers as bare digits.
/// indent < 0 gives the compact form.
inline std::string dump(const json& j, int indent = 2) {
    std::ostringstream os;
    detail::dump_rec(os, j, indent, 0);
    return os.str();
}

} // namespace wonder::json_io
