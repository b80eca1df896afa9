#pragma once

#include "domdimlab/bounded.hpp"
#include "domdimlab/homology.hpp"
#include "domdimlab/nakayama.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace domdimlab::rigidity {

class RigidityError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A finite list of pairwise non-isomorphic indecomposables with Ext data.
class ModuleCatalog {
  public:
    virtual ~ModuleCatalog() = default;
    virtual std::size_t size() const = 0;
    virtual std::string label(std::size_t i) const = 0;
    /// dim Ext^t(X_i, X_j), t >= 1
    virtual std::size_t ext(std::size_t i, std::size_t j, int t) const = 0;
    virtual bool is_projective(std::size_t i) const = 0;
    virtual std::size_t simples() const = 0;
    virtual bool selfinjective() const = 0;
    /// True when every indecomposable module is listed.
    virtual bool complete() const = 0;
    /// Largest t for which ext() is available.
    virtual int ext_limit() const = 0;
};

class NakayamaCatalog final : public ModuleCatalog {
  public:
    explicit NakayamaCatalog(nakayama::NakAlgebra a);
    const nakayama::NakAlgebra& algebra() const { return a_; }
    const std::vector<nakayama::NakModule>& modules() const { return mods_; }
    std::size_t index_of(const nakayama::NakModule& m) const;

    std::size_t size() const override { return mods_.size(); }
    std::string label(std::size_t i) const override { return mods_[i].str(); }
    std::size_t ext(std::size_t i, std::size_t j, int t) const override;
    bool is_projective(std::size_t i) const override;
    std::size_t simples() const override { return static_cast<std::size_t>(a_.n()); }
    bool selfinjective() const override { return nakayama::is_selfinjective(a_); }
    bool complete() const override { return true; }
    int ext_limit() const override { return 1 << 20; }

  private:
    nakayama::NakAlgebra a_;
    std::vector<nakayama::NakModule> mods_;
};

/// Explicit modules over a table algebra; Ext is precomputed up to max_degree.
class TableCatalog final : public ModuleCatalog {
  public:
    TableCatalog(std::vector<homology::Representation> modules, int max_degree, bool complete);
    std::size_t size() const override { return mods_.size(); }
    std::string label(std::size_t i) const override;
    std::size_t ext(std::size_t i, std::size_t j, int t) const override;
    bool is_projective(std::size_t i) const override { return projective_[i]; }
    std::size_t simples() const override;
    bool selfinjective() const override { return selfinjective_; }
    bool complete() const override { return complete_; }
    int ext_limit() const override { return max_degree_; }

  private:
    std::vector<homology::Representation> mods_;
    int max_degree_;
    bool complete_;
    bool selfinjective_;
    std::vector<bool> projective_;
    std::vector<std::vector<std::vector<std::size_t>>> ext_;  // [i][j][t]
};

/// Vertices: indecomposables X with Ext^t(X,X) = 0 for 1 <= t <= k. Adjacent:
/// Ext^t vanishes in both directions for 1 <= t <= k.
struct CompatGraph {
    int k = 1;
    std::vector<std::size_t> vertices;  // catalog indices
    std::vector<std::vector<bool>> adjacent;
};

CompatGraph compat_graph(const ModuleCatalog& c, int k);

/// Exact maximum clique (branch and bound with greedy-coloring bounds over a
/// degeneracy order). Returns positions into adj, sorted.
std::vector<std::size_t> max_clique(const std::vector<std::vector<bool>>& adj);

bool is_k_rigid(const ModuleCatalog& c, const std::vector<std::size_t>& modules, int k);
bool is_k_rigid(const nakayama::NakAlgebra& a, const nakayama::ModuleMultiset& m, int k);

struct RigidityReport {
    int k = 1;
    std::size_t o_k = 0;
    std::vector<std::size_t> witness;  // catalog indices
    std::vector<std::string> witness_labels;
    std::size_t graph_vertices = 0;
    bool witness_verified = false;
};

RigidityReport o_k(const ModuleCatalog& c, int k);

struct RigidSequence {
    int k = 1;
    std::size_t domdim = 0;
    std::size_t q = 0;
    std::size_t w = 0;
    nakayama::ModuleMultiset module;  // distinct summands
    std::size_t size = 0;
    bool rigid = false;
    bool size_bound = false;  // size >= w + q
};

/// The module (+)_{l=0..q} Omega^{(k+2)l}(D(A)) with q maximal such that
/// (k+2)q + k <= domdim - 2.
RigidSequence rigid_sequence_module(const nakayama::NakAlgebra& a, int k, int cutoff);

struct MainInequality {
    int k = 1;
    std::size_t domdim = 0;
    std::size_t w = 0;
    RigidityReport report;
    long lhs = 0;  // (o_k + 2 - w)(k + 2) - 1
    std::size_t rhs = 0;
    bool holds = false;
    std::string gendo_provenance;
};

/// Requires a non-selfinjective algebra with resolved domdim; gendo_provenance
/// records how the gendo-symmetric hypothesis was established.
MainInequality verify_main_inequality(const nakayama::NakAlgebra& a, int k, int cutoff,
                                      std::string gendo_provenance);

bool is_ext1_symmetric(const ModuleCatalog& c);

struct ExtSymBound {
    bool ext1_symmetric = false;
    BoundedValue delta = BoundedValue::finite(0);
    std::size_t o_1 = 0;
    std::size_t s = 0;
    long bound = 0;  // o_1 + s - 2
    bool holds = false;
    /// domdim(B) <= delta + 1 <= o_1 + s - 1 for the supplied End-algebra values.
    std::vector<bool> end_checks;
};

ExtSymBound verify_extsym_bound(const ModuleCatalog& c, int cutoff,
                                const std::vector<BoundedValue>& end_domdims = {});

}  // namespace domdimlab::rigidity
