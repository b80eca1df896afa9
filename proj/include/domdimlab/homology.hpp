#pragma once

#include "domdimlab/bounded.hpp"
#include "domdimlab/quivalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

// Homological algebra of right modules over an AlgebraTable. A module is a
// vector space of row vectors with one action matrix per algebra basis
// element, m.a = m * act(a), so act(ab) = act(a) act(b).
namespace domdimlab::homology {

using exact::Field;
using exact::Matrix;
using exact::Scalar;
using quivalg::AlgebraPtr;
using quivalg::AlgebraTable;

class HomologyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Representation {
  public:
    /// Verifies the module axioms on all basis pairs.
    static Representation create(AlgebraPtr algebra, std::vector<Matrix> actions, std::string name = {});
    /// No verification; for modules built from verified ones.
    static Representation trusted(AlgebraPtr algebra, std::vector<Matrix> actions, std::string name = {});
    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t basis_index) const { return actions_[basis_index]; }
    const std::vector<Matrix>& actions() const { return actions_; }
    /// Action matrix of an arbitrary algebra element (1 x dim A row).
    Matrix act(const Matrix& element) const;
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    /// dim M e_v for every vertex.
    std::vector<std::size_t> dim_vector() const;
    /// Byte string identifying the module up to equality of action matrices.
    std::string fingerprint() const;

  private:
    Representation(AlgebraPtr a, std::vector<Matrix> actions, std::string name);
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
    std::string name_;
};

/// Opposite algebra, cached so that dualizing twice returns to the same table.
AlgebraPtr opposite_of(const AlgebraPtr& a);

Representation simple(const AlgebraPtr& a, std::size_t vertex);
Representation projective(const AlgebraPtr& a, std::size_t vertex);
Representation regular(const AlgebraPtr& a);
/// D(A) = Hom_k(A, k) as a right A-module.
Representation dual_regular(const AlgebraPtr& a);
Representation direct_sum(const std::vector<Representation>& parts);

/// Submodule spanned by the rows of span (must be invariant).
Representation submodule(const Representation& m, const Matrix& span);
struct Quotient {
    Representation module;
    Matrix projection;  // dim M x dim(M/S)
};
Quotient quotient(const Representation& m, const Matrix& span);
/// Smallest submodule containing the given rows.
Matrix generated_submodule(const Representation& m, const Matrix& rows);

/// D(M) = Hom_k(M, k) as a right module over the opposite algebra.
Representation dual(const Representation& m);

/// Row span of M J.
Matrix radical_span(const Representation& m);
Representation radical(const Representation& m);
Representation top(const Representation& m);
/// dim top(M) e_v per vertex.
std::vector<std::size_t> top_dims(const Representation& m);
/// M / M J^k
Representation radical_quotient(const Representation& m, std::size_t k);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

struct CoverStep {
    std::vector<std::size_t> vertices;  // P = (+) e_v A in this order
    std::vector<std::size_t> offsets;   // start of each summand in P coordinates
    Representation cover;               // P
    Matrix generators;                  // rows: images of the e_v, in M coordinates
    Matrix map;                         // dim P x dim M
    Matrix kernel;                      // span of ker, in P coordinates
    Representation syzygy;
    bool minimal = false;               // kernel inside rad P, checked
};

/// Minimal projective cover. Throws on the zero module.
CoverStep projective_cover(const Representation& m);

class Resolution {
  public:
    explicit Resolution(Representation m);
    const Representation& module() const { return module_; }
    /// Computes steps up to index t (P_0 ... P_t); stops at a zero syzygy.
    void extend(std::size_t t);
    /// Step t, or nullptr when the resolution has already terminated.
    const CoverStep* step(std::size_t t) const;
    std::size_t computed() const { return steps_.size(); }
    bool terminated() const { return terminated_; }
    /// dims of Omega^1 ... Omega^t
    std::vector<std::size_t> syzygy_dims(std::size_t t);
    bool minimal() const;

  private:
    Representation module_;
    std::vector<CoverStep> steps_;
    bool terminated_ = false;
};

/// Concurrent cache of resolutions keyed by module fingerprint.
class ResolutionCache {
  public:
    std::shared_ptr<const Resolution> get(const Representation& m, std::size_t length);

  private:
    std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const Resolution>> cache_;
};

struct ExtTable {
    std::string left, right;
    /// dims[t] = dim Ext^t(M,N); dims[0] = dim Hom(M,N).
    std::vector<std::size_t> dims;
};

/// Degrees 0..t; res must be extendable to t+1 (it is copied if needed).
ExtTable ext_dims(const Representation& m, const Representation& n, std::size_t t);
ExtTable ext_dims(Resolution& res, const Representation& n, std::size_t t);
std::size_t dim_hom(const Representation& m, const Representation& n);
/// Least r >= 1 with Ext^r(M,N) != 0, searched for r < cutoff.
BoundedValue first_ext_degree(const Representation& m, const Representation& n, std::size_t cutoff);

/// Basis of Hom_A(M,N) as dim M x dim N matrices.
std::vector<Matrix> hom_space(const Representation& m, const Representation& n);

/// Operators on one space: commuting weight projections summing to 1, and
/// generator operators, both acting on row vectors from the right.
struct OperatorFamily {
    std::vector<Matrix> weights;
    std::vector<Matrix> ops;
};
/// Linear maps F with W_M F = F W_N and O_M F = F O_N (paired by index).
std::vector<Matrix> intertwiners(const OperatorFamily& m, const OperatorFamily& n);

struct SearchLimits {
    std::size_t attempts = 256;
    std::uint64_t seed = 0x5eed5eedULL;
};

/// Searches the intertwiner space for an invertible map. "no" is certified.
Tristate find_isomorphism(const OperatorFamily& m, const OperatorFamily& n, const SearchLimits& limits = {});
Tristate is_isomorphic(const Representation& m, const Representation& n, const SearchLimits& limits = {});

/// yes: local endomorphism ring; no: a Fitting splitting exists.
Tristate is_indecomposable(const Representation& m);

/// Injective coresolution 0 -> M -> I^0 -> I^1 ..., obtained by dualizing a
/// projective resolution over the opposite algebra. Terms as socle vertices.
struct Coresolution {
    std::vector<std::vector<std::size_t>> terms;
    std::vector<std::size_t> cosyzygy_dims;
    bool terminated = false;
};
Coresolution injective_coresolution(const Representation& m, std::size_t t);

/// Whether D(Ae_v) is projective, per vertex.
std::vector<bool> projective_injective_vertices(const AlgebraPtr& a);
BoundedValue domdim_module(const Representation& m, std::size_t cutoff);
BoundedValue domdim(const AlgebraPtr& a, std::size_t cutoff);

bool is_selfinjective(const AlgebraPtr& a);

/// Least r >= 1 with Ext^r(M,M) != 0, searched for r < cutoff. M must not be projective.
BoundedValue phi(const Representation& m, std::size_t cutoff);

struct DeltaResult {
    BoundedValue value = BoundedValue::finite(0);
    bool exact = true;
};
/// Non-selfinjective: inf{r >= 1 : Ext^r(D(A),A) != 0}. Selfinjective: max phi
/// over the witnesses, exact only when complete_witnesses is set.
DeltaResult delta(const AlgebraPtr& a, std::size_t cutoff, const std::vector<Representation>& witnesses = {},
                  bool complete_witnesses = false);

struct Ideal {
    Matrix span;  // rows in algebra coordinates
    Representation module;
    Representation quotient;  // A / X
};
/// Smallest two-sided ideal containing the generators; throws if it is 0 or A.
Ideal ideal_module(const AlgebraPtr& a, const std::vector<Matrix>& generators);
/// J^k as a right module (may be zero).
Representation radical_power(const AlgebraPtr& a, std::size_t k);

struct IdealRigidity {
    std::size_t hom_x_quotient = 0;  // dim Hom(X, A/X)
    std::size_t ext1 = 0;            // dim Ext^1(X,X)
    bool local = false;
    bool holds = false;
};
/// Requires A symmetric (certified) and X a nontrivial proper ideal.
IdealRigidity check_ideal_rigidity(const AlgebraPtr& a, const Ideal& x);

/// End_A(M) for M the direct sum of indecomposable summands, with the
/// summand projections as idempotents; product f*g = f o g.
AlgebraPtr endomorphism_algebra(const std::vector<Representation>& summands);

/// Tests domdim >= 2 and D(Ae) = eA as (eAe, A)-bimodules, e covering the
/// projective-injective vertices.
Tristate is_gendo_symmetric(const AlgebraPtr& a, std::size_t cutoff, const SearchLimits& limits = {});

}  // namespace domdimlab::homology
