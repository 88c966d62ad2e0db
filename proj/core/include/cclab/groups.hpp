#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cclab/gf.hpp"
#include "cclab/matrix.hpp"
#include "cclab/rational.hpp"

namespace cclab {

enum class Family { GL, SL, GU, SU, Sp, GO, SO, Omega };

// dim is always the dimension of the natural module. sign is +1/-1 for
// even-dimensional orthogonal groups and 0 otherwise.
struct GroupSpec {
    Family family = Family::GL;
    int dim = 1;
    int q = 2;
    int sign = 0;

    std::string str() const;
    void validate() const;  // throws std::invalid_argument
    bool orthogonal() const { return family == Family::GO || family == Family::SO || family == Family::Omega; }
    bool unitary() const { return family == Family::GU || family == Family::SU; }
    // half the dimension for Sp and even orthogonal, floor(dim/2) for odd
    int witt_index() const;
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

BigInt group_order(const GroupSpec& spec);

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FormKind { None, Symplectic, Quadratic, Hermitian };

// Gram matrix plus, for quadratic forms, the diagonal values Q(e_i); then
// Q(x) = sum_i quad_i x_i^2 + sum_{i<j} gram_ij x_i x_j.
// Coordinates: isotropic u_1..u_m at indices 0..m-1, partners v_i at m..2m-1
// (B(u_i, v_i) = 1), anisotropic part after 2m.
struct FormSpec {
    FormKind kind = FormKind::None;
    int dim = 0;
    Mat gram;
    std::vector<int> quad;
    int witt_index = 0;
};

FormSpec standard_form(const GroupSpec& spec, const Field& F);
int quad_value(const Field& F, const FormSpec& form, const std::vector<int>& x);
bool preserves_form(const Field& F, const FormSpec& form, const Mat& g, int q_base);

class GroupTable {
public:
    GroupTable(std::string label, FieldPtr field, int dim, FormSpec form, int q_base);

    const std::string& label() const { return label_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int dim() const { return dim_; }
    const FormSpec& form() const { return form_; }
    // q of the group (for unitary groups the matrix field is F_{q^2})
    int q() const { return q_; }
    bool has_spec() const { return has_spec_; }
    const GroupSpec& spec() const { return spec_; }
    void set_spec(const GroupSpec& s) {
        spec_ = s;
        has_spec_ = true;
    }

    int order() const { return static_cast<int>(count_); }
    int entries() const { return dim_ * dim_; }
    const uint8_t* bytes(int id) const { return data_.data() + static_cast<size_t>(id) * entries(); }
    Mat element(int id) const;
    int find(const Mat& m) const;
    int find_bytes(const uint8_t* b) const;
    int mul(int a, int b) const;
    int inv(int a) const { return inverse_[a]; }
    int pow(int a, int64_t e) const;
    int element_order(int a) const;
    const std::vector<int>& generators() const { return gens_; }
    void set_generators(std::vector<int> g) { gens_ = std::move(g); }

    // closure of gens (identity id 0, rest sorted by byte encoding)
    static std::shared_ptr<GroupTable> from_generators(std::string label, FieldPtr field, int dim, FormSpec form,
                                                       int q_base, const std::vector<Mat>& gens, size_t budget);
    static std::shared_ptr<GroupTable> from_elements(std::string label, FieldPtr field, int dim, FormSpec form,
                                                     int q_base, std::vector<Mat> elems);

    void mul_bytes(const uint8_t* a, const uint8_t* b, uint8_t* out) const;

private:
    void build_index();
    void build_inverses();
    void pick_generators_if_empty();

    std::string label_;
    FieldPtr field_;
    int dim_;
    FormSpec form_;
    int q_;
    GroupSpec spec_{};
    bool has_spec_ = false;
    size_t count_ = 0;
    std::vector<uint8_t> data_;
    std::vector<int32_t> slots_;
    uint64_t mask_ = 0;
    std::vector<int> inverse_;
    std::vector<int> gens_;
    friend struct GroupBuilder;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

constexpr size_t kDefaultEnumerationBudget = 20000000;

GroupPtr enumerate(const GroupSpec& spec, size_t budget = kDefaultEnumerationBudget);

struct Subgroup {
    GroupPtr group;
    std::vector<int> embed;  // subgroup id -> parent id
};

// Subgroup consisting of the given parent ids (must be closed).
Subgroup subgroup_from_ids(const GroupPtr& parent, std::vector<int> ids, std::string label);
// Subgroup generated by parent ids.
Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& gens, std::string label);
// Derived subgroup: normal closure of commutators of the generators.
Subgroup derived_subgroup(const GroupPtr& parent);

// Pointwise stabilizer of the listed basis vectors.
Subgroup fix_basis_vectors(const GroupPtr& parent, const std::vector<int>& basis_indices, std::string label);
// Stabilizer of span(u_1..u_m) and span(v_1..v_m): the Levi GL_m of the Siegel parabolic.
Subgroup siegel_levi(const GroupPtr& parent);

struct ParabolicData {
    int j = 0;
    std::vector<int> P, U, L, Z;
    // Z parameterization: X (j x j, row-major) -> element id of I + N_X
    std::vector<std::vector<int>> z_params;
    std::vector<int> z_ids;
};

// For Sp: X symmetric; for orthogonal: X alternating.
ParabolicData parabolic(const GroupPtr& G, int j);

// (dim Ker(g-1), dim Ker(g+1))
std::pair<int, int> fixed_space_dims(const Field& F, const Mat& g, int n);

std::string family_name(Family f);

}  // namespace cclab
