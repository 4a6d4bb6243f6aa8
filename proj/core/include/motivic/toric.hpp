#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "motivic/grothendieck.hpp"
#include "motivic/laurent.hpp"
#include "motivic/numeric.hpp"
#include "motivic/report.hpp"

namespace motivic {

/// Simplicial complex refining the boundary of a reference simplex, with
/// vertices tracked by their barycentric coordinates in that simplex.
///
/// Faces are vertex-index sets; |sigma| below always means the DIMENSION of
/// sigma, i.e. one less than its vertex count.
class Triangulation {
 public:
  using Face = std::vector<int>;  // sorted vertex indices

  /// The reference simplex on n+1 vertices together with all its faces.
  static Triangulation standard(int n);

  Triangulation(int n, std::vector<std::vector<Rational>> vertices,
                std::vector<Face> maximal_faces);

  int ambient_n() const { return n_; }
  const std::vector<std::vector<Rational>>& vertices() const { return vertices_; }
  const std::vector<Face>& maximal_faces() const { return maximal_; }
  /// All faces, the empty face excluded.
  const std::vector<Face>& faces() const { return faces_; }

  /// Smallest face of the reference simplex containing the vertex: the set of
  /// its nonzero barycentric coordinates.
  std::vector<int> support(int vertex) const;

  /// Dimension of the carrier of sigma: the face of the reference simplex
  /// spanned by the supports of sigma's vertices.
  int carrier_dim(const Face& sigma) const;

  /// Local polynomial at a face tau:
  ///   g_tau(t) = sum over sigma containing tau of
  ///              (-1)^{carrier dim} (t-1)^{carrier dim - dim sigma},
  /// where sigma ranges over all faces with tau as a subset (tau itself
  /// included).  Satisfies g(1/t) = t^{dim tau - n} g(t).
  LaurentPoly g_poly(const Face& tau) const;

  /// Global polynomial  h(t) = sum over ALL faces sigma (empty excluded) of
  /// (-1)^{carrier dim} (t-1)^{carrier dim - dim sigma}  minus 1.
  /// Satisfies h(1/t) = t^{-(n+1)} h(t).
  LaurentPoly h_poly() const;

  /// Stellar subdivision at a face of dimension >= 1: a new vertex at the
  /// barycenter of sigma replaces sigma in every maximal face containing it.
  Triangulation stellar_subdivided(const Face& sigma) const;

  /// Consistency probe: affine independence of every maximal face, volumes
  /// summing to the reference volume, and a seeded point-location check that
  /// random interior points land in exactly one maximal face.
  void validate(std::uint64_t seed) const;

 private:
  int n_;
  std::vector<std::vector<Rational>> vertices_;
  std::vector<Face> maximal_;
  std::vector<Face> faces_;

  void close_faces();
};

/// Face-count vector (f_0, ..., f_{m-1}) of an (m-1)-dimensional complex.
struct FaceVector {
  std::vector<Integer> f;

  int m() const { return static_cast<int>(f.size()); }
};

/// h-vector from the face counts:
///   h_p = sum_{i=p}^m (-1)^{i-p} C(i,p) f_{m-1-i},  with f_{-1} = 1.
std::vector<Integer> dehn_sommerville(const FaceVector& fv);

/// True when h_p == h_{m-p} for all p.
bool is_palindromic(const std::vector<Integer>& h);

/// Boundary complex of the m-simplex: f_i = C(m+1, i+1).
FaceVector simplex_boundary(int m);

/// Boundary complex of the m-dimensional cross-polytope: f_i = 2^{i+1} C(m, i+1).
FaceVector cross_polytope(int m);

/// Checks  sum_{l=0}^{n} C(n+1, n-l) (t-1)^l == t^n + ... + t + 1.
bool verify_aux_binomial(int n);

/// Rational simplicial fan: rays are primitive integer vectors, cones are
/// sorted ray-index sets closed under taking faces.
class SimplicialFan {
 public:
  using Cone = std::vector<int>;

  SimplicialFan(int dim, std::vector<std::vector<Integer>> rays,
                std::vector<Cone> maximal_cones);

  int dim() const { return dim_; }
  const std::vector<std::vector<Integer>>& rays() const { return rays_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  /// All cones including the zero cone (empty index set).
  const std::vector<Cone>& cones() const { return cones_; }

  /// Ray vectors of a cone, as rows.
  std::vector<std::vector<Integer>> cone_rays(const Cone& c) const;

  /// Seeded sample check that maximal cones only meet along common faces:
  /// random nonnegative combinations of one cone's rays must not lie interior
  /// to another cone that is not a superset.
  void validate_pairwise(std::uint64_t seed) const;

 private:
  int dim_;
  std::vector<std::vector<Integer>> rays_;
  std::vector<Cone> maximal_;
  std::vector<Cone> cones_;
};

/// Orbit sum of the fan:  sum over cones tau of (L-1)^{dim - |tau|} [O_tau],
/// each orbit symbol of dimension  dim - |tau| + offset  and not marked
/// proper-smooth.  Orbit ids are "O_" plus the ray indices ("O_0" style),
/// "O_empty" for the zero cone.
GrothClass toric_class(const SimplicialFan& fan, long offset);

/// A refinement of a single simplicial cone: the original cone's rays plus
/// the refining fan living inside it.
struct ConeRefinement {
  std::vector<std::vector<Integer>> cone_rays;  // rows, linearly independent
  SimplicialFan refining;
};

/// Face of the original cone spanned by a refining cone: the union over its
/// rays of the original-ray coordinates needed to express them.  Coordinates
/// are solved exactly; a negative coordinate means the refining ray leaves
/// the cone (NotARefinement).
std::vector<int> spanned_face(const ConeRefinement& r, const SimplicialFan::Cone& c);

/// Refinement polynomial of a face tau' of the original cone:
///   p(t) = sum over refining cones sigma with spanned face inside tau' of
///          (-1)^{|spanned face|} (t-1)^{|spanned face| - |sigma|},
/// sizes counting rays.  The zero cone contributes +1; p = 1 when tau' is the
/// zero face.  Satisfies p(1/t) = t^{-|tau'|} p(t).
LaurentPoly p_poly(const ConeRefinement& r, const std::vector<int>& tau_prime);

/// Iterated stellar subdivision of a full-dimensional simplicial fan until
/// every maximal cone has determinant +-1.  Each round inserts the interior
/// lattice point of smallest coordinate sum of some non-unimodular cone.
SimplicialFan stellar_refine(const SimplicialFan& fan);

/// One more stellar subdivision of an already-refined fan, at the
/// primitivized ray sum of its first maximal cone.
SimplicialFan extra_subdivision(const SimplicialFan& fan);

/// For each of two refinements of each maximal cone of the fan (the stellar
/// refinement and a further subdivision of it): all p-polynomial palindromy
/// identities, plus duality of the combination
///   A = [Y] - sum over faces tau' of p-correction terms,
/// checked as  dual(A) == L^{-dim} A.  The two refinements must agree on the
/// verdict.  RankTooLarge above rank 4.
CheckReport check_toric_duality(const SimplicialFan& fan);

}  // namespace motivic
