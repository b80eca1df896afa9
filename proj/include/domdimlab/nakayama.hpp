#pragma once

#include "domdimlab/bounded.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Combinatorial module theory of connected Nakayama algebras. Arrows go
// i -> i+1 (indices mod n on a cycle); right modules; M(i,k) = e_iA/e_iJ^k
// has top S_i and socle S_{i+k-1}. Nothing here needs a ground field.
namespace domdimlab::nakayama {

class KupischError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Orientation { cycle, line };

std::string to_string(Orientation o);

/// Indecomposable module M(vertex, length) = e_vA / e_vJ^length.
struct NakModule {
    int vertex = 0;
    int length = 1;
    auto operator<=>(const NakModule&) const = default;
    std::string str() const { return "M(" + std::to_string(vertex) + "," + std::to_string(length) + ")"; }
};

using ModuleMultiset = std::vector<NakModule>;

class NakAlgebra {
  public:
    /// Checks the Kupisch conditions and rejects semisimple or empty input.
    static NakAlgebra validate(Orientation orientation, std::vector<int> kupisch);

    Orientation orientation() const { return orientation_; }
    bool is_cycle() const { return orientation_ == Orientation::cycle; }
    int n() const { return static_cast<int>(c_.size()); }
    /// c_i, indices taken mod n on a cycle.
    int c(long i) const { return c_[static_cast<std::size_t>(normalize(i))]; }
    const std::vector<int>& kupisch() const { return c_; }
    int dimension() const;
    /// Vertex index mod n (cycle); on a line the index must already be in range.
    int normalize(long i) const;
    bool vertex_exists(long i) const;
    std::string str() const;

    bool operator==(const NakAlgebra&) const = default;

  private:
    NakAlgebra(Orientation o, std::vector<int> c) : orientation_(o), c_(std::move(c)) {}
    Orientation orientation_;
    std::vector<int> c_;
};

std::vector<NakModule> indecomposables(const NakAlgebra& a);
void check_module(const NakAlgebra& a, const NakModule& m);

NakModule projective(const NakAlgebra& a, int vertex);
NakModule simple(const NakAlgebra& a, int vertex);
int socle(const NakAlgebra& a, const NakModule& m);
/// dim M e_v
int dim_at(const NakAlgebra& a, const NakModule& m, int v);

/// Length of the indecomposable injective with socle S_a (number of paths ending at a).
int injective_length(const NakAlgebra& a, int socle_vertex);
NakModule injective_of_socle(const NakAlgebra& a, int socle_vertex);
bool is_projective(const NakAlgebra& a, const NakModule& m);
bool is_injective(const NakAlgebra& a, const NakModule& m);

/// Omega(M(i,k)) = M(i+k, c_i-k); nullopt when M is projective.
std::optional<NakModule> syzygy(const NakAlgebra& a, const NakModule& m);
/// Cokernel of the injective envelope; nullopt when M is injective.
std::optional<NakModule> cosyzygy(const NakAlgebra& a, const NakModule& m);
/// Syzygies of every summand, projective kernels dropped.
ModuleMultiset syzygy_power(const NakAlgebra& a, const ModuleMultiset& ms, int t);

int dim_hom(const NakAlgebra& a, const NakModule& m, const NakModule& n);
/// dim Ext^t(M,N), t >= 1.
int dim_ext(const NakAlgebra& a, int t, const NakModule& m, const NakModule& n);

/// Indecomposables satisfying 1 <= k <= n-1 or k > c_i - n (cyclic, n >= 2).
std::vector<NakModule> one_rigid_indecomposables(const NakAlgebra& a);

BoundedValue domdim_module(const NakAlgebra& a, const NakModule& m, int cutoff);
BoundedValue domdim(const NakAlgebra& a, int cutoff);

bool is_selfinjective(const NakAlgebra& a);
bool is_symmetric(const NakAlgebra& a);

/// Indecomposable summands of D(A): the injectives I(a), a = 0..n-1.
std::vector<NakModule> dual_regular(const NakAlgebra& a);
std::vector<NakModule> regular(const NakAlgebra& a);

/// The opposite algebra, renumbered so that its arrows again go i -> i+1.
NakAlgebra opposite(const NakAlgebra& a);

/// phi_M = least r >= 1 with Ext^r(M,M) != 0, searched for r < cutoff.
BoundedValue phi(const NakAlgebra& a, const ModuleMultiset& m, int cutoff);
BoundedValue delta(const NakAlgebra& a, int cutoff);

/// All valid cyclic Kupisch series with n simples and entries in [2, max_entry].
std::vector<NakAlgebra> cyclic_corpus(int n, int max_entry);
/// All valid connected line Kupisch series with n simples.
std::vector<NakAlgebra> line_corpus(int n);

}  // namespace domdimlab::nakayama
