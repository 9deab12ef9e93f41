#ifndef ETALE_COVER_HPP
#define ETALE_COVER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "etale/krasner.hpp"
#include "etale/multipoly.hpp"

namespace etale {

/// A domain point together with its image; stored on a cover as a checked
/// membership certificate.
struct Witness {
    std::vector<FieldElement> domain_point;
    std::vector<FieldElement> image_point;
};

/// Image of an open chunk of affine space under a polynomial map with
/// everywhere-invertible Jacobian.  The domain is cut out by the inequations;
/// inequations[0] is always the Jacobian determinant of the map.
struct EtaleCover {
    Field field = Field::rationals();
    int ambient = 0;     // image dimension
    int domain_dim = 0;  // domain dimension (equal to ambient here)
    std::vector<MultiPoly> map;
    std::vector<MultiPoly> inequations;
    std::string label;
    std::vector<Witness> witnesses;
};

/// Builds a cover, computing and prepending the Jacobian determinant.
EtaleCover make_cover(const Field& K, std::vector<MultiPoly> map,
                      std::vector<MultiPoly> extra_inequations, std::string label);

EtaleCover identity_cover(const Field& K, int n);

/// Image = monic polynomials with n distinct roots: component j is the x^j
/// coefficient of prod_i (x - b_i); the Jacobian inequation is (up to sign)
/// prod_(i<j) (b_i - b_j), which is exactly the distinct-roots condition.
EtaleCover split_cover(const Field& K, int n);

/// Image = a neighborhood of a inside its extension-isomorphism class; the
/// domain also excludes points where beta(b) fails to generate.
EtaleCover krasner_cover(const KrasnerMap& G);

bool witness_valid(const EtaleCover& c, const Witness& w);
/// Evaluates the map at the point and stores the pair; throws witness_missing
/// when an inequation vanishes there.
void attach_witness(EtaleCover& c, const std::vector<FieldElement>& domain_point);

struct MemberResult {
    enum class Status { Found, NotInImage, Inconclusive };
    Status status = Status::Inconclusive;
    std::vector<FieldElement> preimage;
    /// p-adic Newton trace: min over components of v(map(x_k) - w).
    std::vector<long> residual_valuations;
    std::string note;
};

/// Finite fields: lexicographic scan of the domain.  p-adic fields: scan the
/// residue field for a seed with unit Jacobian, then Newton-lift the fiber
/// equation; reports Inconclusive when no unit-Jacobian seed exists.
MemberResult membership_witness(const EtaleCover& c, const std::vector<FieldElement>& w,
                                long long budget = -1);

/// Exact image over a finite field, sorted in canonical point order.
std::vector<std::vector<FieldElement>> image(const EtaleCover& c, long long budget = -1);

/// Polynomial equations and inequations in a shared variable space.
struct ConstraintSystem {
    Field field = Field::rationals();
    int variables = 0;
    std::vector<MultiPoly> equations;
    std::vector<MultiPoly> inequations;
};

/// Fiber product: variables are the two domains side by side, equations force
/// equal images, inequations keep both domains open.
ConstraintSystem intersect(const EtaleCover& c1, const EtaleCover& c2);
/// Same system with the shared image pinned to w; solvable over K exactly
/// when w lies in both images.
ConstraintSystem intersect_at(const EtaleCover& c1, const EtaleCover& c2,
                              const std::vector<FieldElement>& w);

bool satisfied_at(const ConstraintSystem& s, const std::vector<FieldElement>& point);
std::optional<std::vector<FieldElement>> solve(const ConstraintSystem& s, long long budget = -1);
std::vector<std::vector<FieldElement>> all_solutions(const ConstraintSystem& s,
                                                     long long budget = -1);

/// Post-compose with x -> scale * x + shift coordinatewise; witnesses carry
/// over with transformed images.
EtaleCover affine_transform(const EtaleCover& c, const std::vector<FieldElement>& shift,
                            const std::vector<FieldElement>& scale);

bool images_disjoint(const EtaleCover& c1, const EtaleCover& c2, long long budget = -1);

/// Irreducible-class cover versus the split cover of the same degree: both
/// images nonempty and disjoint.
bool disjointness_demo(const MonicVector& a, long long budget = -1);

/// Membership systems for the two covers pulled back along the line
/// t -> p + t(q - p).  Variable 0 is the line parameter, the rest are the
/// cover domain; t = 0 solves the first system, t = 1 the second.
std::pair<ConstraintSystem, ConstraintSystem> separate_points(const EtaleCover& X,
                                                              const EtaleCover& Y,
                                                              const std::vector<FieldElement>& pt_p,
                                                              const std::vector<FieldElement>& pt_q);

}  // namespace etale

#endif
