#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "easyq/cmatrix.hpp"
#include "easyq/index_space.hpp"

namespace easyq {

enum class RelationPreset { Opq, Bpq, Spq, Hpq, Hspq, H4, Magic, Cubic, Sudoku, DoubleSudoku };

std::string preset_name(RelationPreset preset);
RelationPreset parse_preset(const std::string& name);

struct CheckReport {
  bool pass = false;
  double maxResidual = 0.0;
  std::vector<std::pair<std::string, double>> relations;
};

/// Runs the preset's relations against the model; every residual is a
/// relative Frobenius deviation. Presets other than magic/cubic/sudoku/
/// double-sudoku require n == 2p+q for the bar relations.
CheckReport check(const BlockMatrixModel& u, RelationPreset preset, int p, int q,
                  double tol = 1e-9);

/// (C ⊗ 1_d) U (C* ⊗ 1_d); carries bar-relation models to models with
/// selfadjoint entries.
BlockMatrixModel conjugate_by_c(const BlockMatrixModel& u, int p, int q);

/// Conjugation by the row/column permutation that gathers the 0-indices
/// of all pairs in front (n = 2p, q = 0).
BlockMatrixModel sudoku_transform(const BlockMatrixModel& u, int p);

/// Splits every (selfadjoint partial-symmetry) entry of the sudoku form
/// into its positive and negative parts, giving the 4p x 4p magic block
/// pattern.
BlockMatrixModel double_sudoku(const BlockMatrixModel& u, int p);

/// Entrywise P = U* U; defined for partial-isometry models, where the
/// output is a magic unitary.
BlockMatrixModel quotient_projections(const BlockMatrixModel& u, int p, int q, double tol = 1e-9);

enum class SampleGroup { O, B, HxS, TorusH, H4, Hq, Sq };

std::string group_name(SampleGroup g);
SampleGroup parse_group(const std::string& name);

/// Deterministic scalar (d = 1) sample of the named classical group in
/// its bar-relation picture.
BlockMatrixModel sample_classical(SampleGroup g, int p, int q, std::uint64_t seed);

/// Alternating-projection search for a partial-isometry model with a
/// nonzero pair-to-q corner block. Returns nothing when the budget is
/// exhausted; any returned model passes the Hpq preset at 1e-6.
std::optional<BlockMatrixModel> witness_search(int d, long long budget, std::uint64_t seed,
                                               int p = 1, int q = 1);

/// z == conj(z) |z|^{2k} within tol; scalar partial-symmetry relation.
bool scalar_partial_symmetry_relation(cplx z, int k, double tol = 1e-9);

/// For a d = 1 model whose entries satisfy the scalar partial-symmetry
/// relation, returns every entry value; all of them land on -1, 0 or 1.
std::vector<double> classify_partial_symmetries(const BlockMatrixModel& u, double tol = 1e-9);

std::string model_to_json(const BlockMatrixModel& u);
BlockMatrixModel model_from_json(const std::string& text);

}  // namespace easyq
