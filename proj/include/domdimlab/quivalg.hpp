#pragma once

#include "domdimlab/bounded.hpp"
#include "domdimlab/exactmath.hpp"
#include "domdimlab/nakayama.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace domdimlab::quivalg {

using exact::Field;
using exact::Matrix;
using exact::Scalar;

class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a relation or element expression; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

struct StructureConstant {
    std::size_t left, right, result;
    Scalar value;
};

struct Idempotent {
    std::string vertex;
    Matrix coords;  // 1 x dim
};

class AlgebraTable;
using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

/// A finite-dimensional algebra given by a basis and structure constants
/// b_i * b_j = sum_k c_ijk b_k, together with a complete set of orthogonal
/// primitive idempotents. Elements are 1 x dim row vectors.
class AlgebraTable {
  public:
    struct Data {
        Field field = Field::rational();
        std::vector<std::string> basis;
        std::vector<StructureConstant> constants;
        Matrix unit;
        std::vector<Idempotent> idempotents;
        /// Claimed radical basis (rows); verified. Computed when absent.
        std::optional<Matrix> radical;
        std::string provenance;
        std::map<std::string, Matrix> named_elements;
    };

    /// Validates associativity, the unit, the idempotents and the radical.
    static AlgebraPtr create(Data data);

    const Field& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const std::string& provenance() const { return provenance_; }
    const std::map<std::string, Matrix>& named_elements() const { return named_; }

    /// Matrix of x -> x * b_i on row vectors.
    const Matrix& right_mult(std::size_t i) const { return right_[i]; }
    /// Matrix of x -> b_i * x on row vectors.
    const Matrix& left_mult(std::size_t i) const { return left_[i]; }
    Matrix right_action(const Matrix& y) const;
    Matrix left_action(const Matrix& y) const;
    Matrix multiply(const Matrix& x, const Matrix& y) const;
    Matrix basis_element(std::size_t i) const;
    Matrix zero_element() const { return Matrix(field_, 1, dim()); }

    const Matrix& unit() const { return unit_; }
    const std::vector<Idempotent>& idempotents() const { return idempotents_; }
    std::size_t vertex_count() const { return idempotents_.size(); }
    std::size_t vertex_index(const std::string& name) const;

    /// Reduced row basis of the Jacobson radical.
    const Matrix& radical() const { return radical_; }
    bool is_semisimple() const { return radical_.rows() == 0; }
    void require_nonsemisimple() const;
    /// Reduced basis of J^k (k >= 0).
    Matrix radical_power(std::size_t k) const;
    std::size_t loewy_length() const;
    /// Elements e_i g e_j of J whose classes form a basis of J/J^2.
    const std::vector<Matrix>& radical_generators() const;

    std::vector<StructureConstant> structure_constants() const;
    /// Basis of e_u A e_v (rows).
    Matrix corner_span(std::size_t u, std::size_t v) const;

    bool operator==(const AlgebraTable& o) const;

  private:
    AlgebraTable() = default;
    void verify_radical(const Matrix& rad) const;
    Matrix compute_radical() const;

    Field field_ = Field::rational();
    std::vector<std::string> basis_;
    std::vector<Matrix> right_, left_;
    Matrix unit_;
    std::vector<Idempotent> idempotents_;
    Matrix radical_;
    std::string provenance_;
    std::map<std::string, Matrix> named_;

    mutable std::once_flag gens_once_;
    mutable std::vector<Matrix> gens_;
    mutable std::mutex powers_mutex_;
    mutable std::vector<Matrix> powers_;
};

// ------------------------------------------------------------ quivers

struct Arrow {
    std::string name, source, target;
};

struct QuiverSpec {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::string> relations;
    int loewy_bound = 2;
    Field field = Field::rational();

    void validate() const;
    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
};

/// A path: start vertex then arrows composed left to right ("a*b" = a, then b).
struct Path {
    std::size_t start = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    auto operator<=>(const Path&) const = default;
};

std::size_t path_end(const QuiverSpec& q, const Path& p);
std::string path_name(const QuiverSpec& q, const Path& p);

struct RelationTerm {
    mpz_class coefficient;
    Path path;
};

struct RelationExpr {
    std::vector<RelationTerm> terms;
    std::string str(const QuiverSpec& q) const;
};

/// Unbound term of the grammar: coefficient * name * name * ...
struct RawTerm {
    mpz_class coefficient;
    std::vector<std::string> names;
    std::size_t position = 0;
};

/// Grammar: expr := term (("+"|"-") term)* ; term := [integer "*"]? name ("*" name)*
std::vector<RawTerm> parse_expression(const std::string& text);

/// Parses and binds a relation to the quiver: names are arrows or vertices;
/// like paths are merged and terms are sorted by degree-lexicographic order.
RelationExpr parse_relation(const std::string& text, const QuiverSpec& q);

/// Basis = normal-form paths of length < L modulo the relation ideal. Fails
/// unless every path of length L lies in the ideal (Loewy bound certificate).
AlgebraPtr compile(const QuiverSpec& spec);

/// Evaluates an expression whose names are named elements, basis names or vertices.
Matrix evaluate_expression(const AlgebraTable& a, const std::string& text);

std::vector<std::string> preset_names();
/// Known presets: hopf-a5-f2, dihedral8-f2, dihedral8-quiver-f2,
/// quaternion8-f2, preproj-a2, truncated-poly(N,FIELD).
AlgebraPtr preset(const std::string& name);
/// Quiver behind a quiver-based preset (throws for table presets).
QuiverSpec preset_quiver(const std::string& name);

AlgebraPtr opposite(const AlgebraTable& a);

struct Enveloping {
    AlgebraPtr algebra;                 // A (x) A^op, basis index i*dim + j
    std::vector<Matrix> bimodule_action;  // A as right A^e-module: x.(a (x) b) = b x a
};

Enveloping enveloping(const AlgebraTable& a, std::size_t size_limit = 4096);

AlgebraPtr nakayama_to_table(const nakayama::NakAlgebra& a, Field field, std::size_t size_limit = 4096);

/// e A e for e the sum of the idempotents with the given vertex indices.
AlgebraPtr corner_algebra(const AlgebraTable& a, const std::vector<std::size_t>& vertices);

/// Group algebra from a multiplication table of indices.
AlgebraPtr group_algebra(Field field, const std::vector<std::string>& names,
                         const std::vector<std::vector<std::size_t>>& table, std::string provenance);

bool is_local(const AlgebraTable& a);
/// Every indecomposable injective D(Ae_v) is projective.
bool is_selfinjective(const AlgebraTable& a);

struct SymmetricFormSearch {
    std::size_t attempts = 256;
    std::uint64_t seed = 0x5eed5eedULL;
};

/// Searches for a nondegenerate symmetric associative form b(x,y) = lambda(xy).
/// "no" is certified; "undetermined" means the bounded search found no witness.
Tristate is_symmetric(const AlgebraTable& a, const SymmetricFormSearch& search = {});

}  // namespace domdimlab::quivalg
