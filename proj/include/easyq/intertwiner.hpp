#pragma once

#include <vector>

#include "easyq/cmatrix.hpp"
#include "easyq/index_space.hpp"
#include "easyq/partition.hpp"

namespace easyq {

class CategoryId;

/// Index tuples encoded base n, leftmost point most significant.
long long encode_tuple(const std::vector<int>& tuple, int n);
std::vector<int> decode_tuple(long long code, int len, int n);

/// Evaluates the indexing rule of a (decorated) partition and solves it
/// column by column. The decoration picks the rule:
///   plain     - within a block the upper and the lower index sequences
///               alternate x, bar x, x, ... and share their leading value;
///   bulleted  - equal indices on like-colored points, barred on unlike
///               (space must be a pure pair part, q = 0);
///   product   - tag-1 blocks follow the bulleted rule on the pair part,
///               tag-2 blocks are constant on the q-part.
class DeltaSolver {
 public:
  DeltaSolver(const Partition& p, const IndexSpace& space);
  DeltaSolver(const BulletedPartition& p, const IndexSpace& space);
  DeltaSolver(const ProductPartition& p, const IndexSpace& space);
  DeltaSolver(const AnyPartition& p, const IndexSpace& space);

  int upper() const { return k_; }
  int lower() const { return l_; }
  const IndexSpace& space() const { return space_; }

  /// delta value in {0,1}.
  int check(const std::vector<int>& upperIdx, const std::vector<int>& lowerIdx) const;

  /// Encoded lower tuples with delta == 1 for the given upper tuple,
  /// ascending.
  std::vector<long long> column(const std::vector<int>& upperIdx) const;
  std::vector<long long> column(long long upperCode) const;

  /// Number of blocks with no upper point (free anchors per column).
  int free_blocks() const;

 private:
  struct PointRel {
    int pos = 0;       // 0-based position within its row
    bool barred = false;  // value = barred ? bar(anchor) : anchor
  };
  struct BlockPlan {
    std::vector<PointRel> upperPts;
    std::vector<PointRel> lowerPts;
    int anchorLo = 0;  // allowed anchor values [anchorLo, anchorHi)
    int anchorHi = 0;
  };

  void build(const Partition& p, const std::vector<Color>* colors, const std::vector<int>* tags);

  int k_ = 0;
  int l_ = 0;
  IndexSpace space_;
  std::vector<BlockPlan> plans_;
};

int delta(const Partition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space);
int delta(const BulletedPartition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space);
int delta(const ProductPartition& p, const std::vector<int>& i, const std::vector<int>& j,
          const IndexSpace& space);

/// Pair-partition rule built from an arbitrary real symmetric involutive
/// integer matrix: a product of F entries over the horizontal strings and
/// of Kronecker deltas over the vertical strings.
long long delta_general_f(const Partition& pairing, const std::vector<int>& i,
                          const std::vector<int>& j, const IntMatrix& f);

/// Dense n^l x n^k matrix of delta values.
IntMatrix t_matrix(const AnyPartition& p, const IndexSpace& space);
IntMatrix t_matrix_general_f(const Partition& pairing, const IntMatrix& f);

IntMatrix xi_column(const IndexSpace& space);   // the pair in P(0,2): n^2 x 1
IntMatrix eta_column(const IndexSpace& space);  // the singleton in P(0,1): n x 1

/// e_z -> e_{z or bar z} ⊗ ... alternating over `copies` factors;
/// startBarred selects whether the first factor is barred. n^copies x n.
IntMatrix diag_fork_matrix(const IndexSpace& space, int copies, bool startBarred);

/// Exact dimension of span{T_pi} via the rank of the Gram matrix of
/// pairwise inner products (all operands must share one shape).
int gram_rank(const std::vector<AnyPartition>& ps, const IndexSpace& space);

/// gram_rank over cat(0,k).
int fix_dim(const CategoryId& cat, int k, const IndexSpace& space);

struct IntertwinerCheck {
  bool ok = false;
  double residual = 0.0;
};

/// Whether T (n^l x n^k) intertwines U^{tensor k} and U^{tensor l}:
/// U^{(l)} (T ⊗ 1_d) = (T ⊗ 1_d) U^{(k)} up to tol in relative Frobenius
/// norm.
IntertwinerCheck is_intertwiner(const IntMatrix& t, const BlockMatrixModel& u, int k, int l,
                                double tol = 1e-9);

}  // namespace easyq
