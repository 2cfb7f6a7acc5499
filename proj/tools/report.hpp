#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace poisinv {

/*
 * Accumulates "key: value" lines, some of which compare a computed value
 * against an expected one.  Renders as plain text or as a JSON mirror.
 * Line order is insertion order, so output is stable across runs.
 */
class Report {
public:
    void add(std::string key, std::string value) {
        lines_.push_back({std::move(key), std::move(value), std::nullopt, true});
    }

    // string equality comparison
    void check(std::string key, std::string expected, std::string actual) {
        const bool ok = expected == actual;
        verdict(std::move(key), std::move(expected), std::move(actual), ok);
    }

    // caller compared the values (e.g. parsed polynomials)
    void verdict(std::string key, std::string expected, std::string actual, bool ok) {
        lines_.push_back({std::move(key), std::move(actual), std::move(expected), ok});
        if (!ok) ++mismatches_;
    }

    unsigned mismatches() const { return mismatches_; }
    bool ok() const { return mismatches_ == 0; }
    std::size_t size() const { return lines_.size(); }

    void print_text(std::ostream& os) const {
        for (const auto& l : lines_) {
            if (!l.expected) {
                os << l.key << ": " << l.value << "\n";
            } else if (l.match) {
                os << l.key << ": " << l.value << " [match]\n";
            } else {
                os << l.key << ": expected " << *l.expected << ", got " << l.value
                   << " [mismatch]\n";
            }
        }
    }

    void print_json(std::ostream& os) const {
        nlohmann::ordered_json lines = nlohmann::ordered_json::array();
        for (const auto& l : lines_) {
            nlohmann::ordered_json o;
            o["key"] = l.key;
            o["value"] = l.value;
            if (l.expected) {
                o["expected"] = *l.expected;
                o["match"] = l.match;
            }
            lines.push_back(std::move(o));
        }
        nlohmann::ordered_json top;
        top["lines"] = std::move(lines);
        top["mismatches"] = mismatches_;
        os << top.dump(2) << "\n";
    }

    void print(std::ostream& os, bool json) const {
        json ? print_json(os) : print_text(os);
    }

private:
    struct Line {
        std::string key;
        std::string value;
        std::optional<std::string> expected;
        bool match;
    };

    std::vector<Line> lines_;
    unsigned mismatches_ = 0;
};

}  // namespace poisinv
