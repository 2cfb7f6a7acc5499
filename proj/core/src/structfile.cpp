#include "poisinv/structfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "poisinv/errors.hpp"

namespace poisinv {

namespace {

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

unsigned parse_count(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v <= 0) throw std::invalid_argument(s);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw FileFormatError("expected a positive integer, got '" + s + "'", line);
    }
}

// index of {x_i, x_j}, i < j, within the flattened pair table
std::size_t pair_index(unsigned i, unsigned j, unsigned n) {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
           (j - i - 1);
}

struct Section {
    std::string kind;  // "structure", "matrix", "group", "golden"
    std::string name;
};

Section parse_header(const std::string& body, std::size_t line) {
    const auto space = body.find(' ');
    const std::string kind = space == std::string::npos ? body : trim(body.substr(0, space));
    const std::string name = space == std::string::npos ? "" : trim(body.substr(space + 1));
    if (kind == "structure" || kind == "golden") {
        if (!name.empty())
            throw FileFormatError("section [" + kind + "] does not take a name", line);
    } else if (kind == "matrix" || kind == "group") {
        if (name.empty()) throw FileFormatError("section [" + kind + "] needs a name", line);
    } else {
        throw FileFormatError("unknown section [" + body + "]", line);
    }
    return {kind, name};
}

}  // namespace

PoissonStructure StructFile::structure() const {
    return PoissonStructure(nvars, table);
}

const Matrix& StructFile::matrix(const std::string& name) const {
    for (const auto& [n, m] : matrices)
        if (n == name) return m;
    throw UnknownName("matrix '" + name + "'");
}

std::vector<Matrix> StructFile::group_generators(const std::string& name) const {
    for (const auto& [n, gens] : groups)
        if (n == name) {
            std::vector<Matrix> out;
            out.reserve(gens.size());
            for (const auto& g : gens) out.push_back(matrix(g));
            return out;
        }
    throw UnknownName("group '" + name + "'");
}

const GoldenValue* StructFile::find_golden(const std::string& key) const {
    for (const auto& [k, v] : golden)
        if (k == key) return &v;
    return nullptr;
}

StructFile parse_struct_file(const std::string& text, unsigned zeta_modulus) {
    StructFile out;
    bool saw_structure = false;
    bool saw_nvars = false;
    std::vector<std::pair<std::string, std::string>> brackets;  // raw, with lines
    std::vector<std::size_t> bracket_lines;
    std::optional<std::string> potential_src;
    std::size_t potential_line = 0;

    std::optional<Section> section;
    std::set<std::string> matrix_names, group_names;
    std::vector<std::pair<std::string, std::size_t>> group_refs;  // name use sites

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw FileFormatError("unterminated section header", lineno);
            section = parse_header(trim(line.substr(1, line.size() - 2)), lineno);
            if (section->kind == "structure") {
                if (saw_structure)
                    throw FileFormatError("duplicate [structure] section", lineno);
                saw_structure = true;
            } else if (section->kind == "matrix") {
                if (!matrix_names.insert(section->name).second)
                    throw FileFormatError("duplicate matrix '" + section->name + "'", lineno);
                out.matrices.emplace_back(section->name, Matrix());
            } else if (section->kind == "group") {
                if (!group_names.insert(section->name).second)
                    throw FileFormatError("duplicate group '" + section->name + "'", lineno);
                out.groups.emplace_back(section->name, std::vector<std::string>{});
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw FileFormatError("expected 'key = value'", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw FileFormatError("empty key", lineno);
        if (!section) throw FileFormatError("entry before any section", lineno);

        if (section->kind == "structure") {
            if (key == "nvars") {
                if (saw_nvars) throw FileFormatError("duplicate nvars", lineno);
                saw_nvars = true;
                out.nvars = parse_count(value, lineno);
            } else if (key == "superpotential") {
                if (potential_src)
                    throw FileFormatError("duplicate superpotential", lineno);
                potential_src = value;
                potential_line = lineno;
            } else if (key.rfind("bracket.", 0) == 0) {
                brackets.emplace_back(key, value);
                bracket_lines.push_back(lineno);
            } else {
                throw FileFormatError("unknown structure key '" + key + "'", lineno);
            }
        } else if (section->kind == "matrix") {
            if (key != "rows")
                throw FileFormatError("unknown matrix key '" + key + "'", lineno);
            try {
                out.matrices.back().second = parse_matrix(value, zeta_modulus);
            } catch (const SyntaxError& e) {
                throw FileFormatError(e.what(), lineno);
            }
        } else if (section->kind == "group") {
            if (key != "generators")
                throw FileFormatError("unknown group key '" + key + "'", lineno);
            const auto names = split(value, ',');
            if (names.empty()) throw FileFormatError("empty generator list", lineno);
            for (const auto& name : names) {
                if (name.empty()) throw FileFormatError("empty generator name", lineno);
                out.groups.back().second.push_back(name);
                group_refs.emplace_back(name, lineno);
            }
        } else {  // golden
            if (key.size() > 11 && key.rfind(".provenance") == key.size() - 11) {
                const std::string base = key.substr(0, key.size() - 11);
                GoldenValue* entry = nullptr;
                for (auto& [k, v] : out.golden)
                    if (k == base) entry = &v;
                if (!entry)
                    throw FileFormatError("provenance for unknown golden key '" + base + "'",
                                          lineno);
                if (value == "stated") entry->provenance = Provenance::stated;
                else if (value == "derived") entry->provenance = Provenance::derived;
                else if (value == "trivial") entry->provenance = Provenance::trivial;
                else
                    throw FileFormatError(
                        "provenance must be stated, derived, or trivial, got '" + value + "'",
                        lineno);
            } else {
                if (out.find_golden(key))
                    throw FileFormatError("duplicate golden key '" + key + "'", lineno);
                out.golden.emplace_back(key, GoldenValue{value, std::nullopt});
            }
        }
    }

    if (!saw_structure) throw FileFormatError("missing [structure] section", lineno);
    if (potential_src && !brackets.empty())
        throw FileFormatError("superpotential and bracket entries are mutually exclusive",
                              potential_line);

    out.table.assign(static_cast<std::size_t>(out.nvars) * (out.nvars - 1) / 2,
                     MultiPoly(out.nvars));

    if (potential_src) {
        try {
            out.superpotential = parse_poly(*potential_src, out.nvars, zeta_modulus);
            const PoissonStructure p =
                PoissonStructure::from_superpotential(*out.superpotential);
            for (unsigned i = 0; i + 1 < out.nvars; ++i)
                for (unsigned j = i + 1; j < out.nvars; ++j) {
                    const MultiPoly br = p.generator_bracket(i, j);
                    out.table[pair_index(i, j, out.nvars)] = br;
                }
        } catch (const SyntaxError& e) {
            throw FileFormatError(e.what(), potential_line);
        } catch (const WrongVariableCount& e) {
            throw FileFormatError(e.what(), potential_line);
        } catch (const NotHomogeneousDegree3& e) {
            throw FileFormatError(e.what(), potential_line);
        }
    }

    std::set<std::size_t> filled;
    for (std::size_t b = 0; b < brackets.size(); ++b) {
        const auto& [key, value] = brackets[b];
        const std::size_t lineat = bracket_lines[b];
        const std::string suffix = key.substr(8);
        if (suffix.size() != 2 || suffix[0] < '1' || suffix[1] < '1')
            throw FileFormatError("bracket keys look like bracket.12", lineat);
        const unsigned i = static_cast<unsigned>(suffix[0] - '1');
        const unsigned j = static_cast<unsigned>(suffix[1] - '1');
        if (i >= out.nvars || j >= out.nvars || i == j)
            throw FileFormatError("bracket indices out of range in '" + key + "'", lineat);
        const std::size_t at = pair_index(std::min(i, j), std::max(i, j), out.nvars);
        if (!filled.insert(at).second)
            throw FileFormatError("bracket pair set twice in '" + key + "'", lineat);
        MultiPoly f(out.nvars);
        try {
            f = parse_poly(value, out.nvars, zeta_modulus);
        } catch (const SyntaxError& e) {
            throw FileFormatError(e.what(), lineat);
        }
        out.table[at] = i < j ? f : -f;
    }

    for (const auto& [name, lineat] : group_refs)
        if (!matrix_names.count(name))
            throw FileFormatError("group references unknown matrix '" + name + "'", lineat);
    for (const auto& [name, m] : out.matrices)
        if (m.rows() == 0)
            throw FileFormatError("matrix '" + name + "' has no rows entry", lineno);

    return out;
}

StructFile read_struct_file(const std::string& path, unsigned zeta_modulus) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_struct_file(buf.str(), zeta_modulus);
}

}  // namespace poisinv
