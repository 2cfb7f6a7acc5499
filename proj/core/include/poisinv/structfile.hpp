#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poisinv/expr.hpp"
#include "poisinv/matrix.hpp"
#include "poisinv/multipoly.hpp"
#include "poisinv/poisson.hpp"

namespace poisinv {

/*
 * Structure bundles in a flat key/value text format:
 *
 *   [structure]
 *   nvars = 3
 *   superpotential = x1^3        # or bracket.12 / bracket.23 / bracket.31
 *
 *   [matrix refl]
 *   rows = [-1,0,0; 2,1,0; 3,0,1]
 *
 *   [group z2]
 *   generators = refl            # comma-separated matrix names
 *
 *   [golden]
 *   molien.z2 = 1/((1-t)^2*(1-t^2))
 *   molien.z2.provenance = stated
 *
 * '#' starts a comment, blank lines are skipped, whitespace around keys and
 * values is trimmed.  bracket.ij assigns {x_i, x_j}; either order of i and j
 * is accepted and entered antisymmetrically.  Golden entries are free-form
 * expected values for reporting; an optional <key>.provenance line tags the
 * entry as stated, derived, or trivial.
 */

enum class Provenance { stated, derived, trivial };

struct GoldenValue {
    std::string value;
    std::optional<Provenance> provenance;
};

struct StructFile {
    unsigned nvars = 3;
    std::optional<MultiPoly> superpotential;  // when the file gives one
    std::vector<MultiPoly> table;             // pair order (1,2),(1,3),(2,3),...
    std::vector<std::pair<std::string, Matrix>> matrices;  // file order
    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    std::vector<std::pair<std::string, GoldenValue>> golden;

    PoissonStructure structure() const;
    const Matrix& matrix(const std::string& name) const;             // UnknownName
    std::vector<Matrix> group_generators(const std::string& name) const;  // UnknownName
    const GoldenValue* find_golden(const std::string& key) const;    // null when absent
};

StructFile parse_struct_file(const std::string& text,
                             unsigned zeta_modulus = kDefaultZetaModulus);

// reads and parses a file from disk; FileFormatError on I/O failure
StructFile read_struct_file(const std::string& path,
                            unsigned zeta_modulus = kDefaultZetaModulus);

}  // namespace poisinv
