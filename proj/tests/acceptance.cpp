// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// rational equalities; there is no tolerance anywhere.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "cli_runner.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Tally {
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
  }
};

Vector added(const Vector& x, const Vector& y) {
  Vector out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

Vector kron(const Vector& x, const Vector& y) {
  Vector out;
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(a * b);
  return out;
}

std::string describe(const SplitNorm& a) {
  return "p=" + std::to_string(a.cfg().prime()) + " basis-cols=" + std::to_string(a.dim()) + " values=" +
         to_string(a.values());
}

Tally norm_axioms() {
  Tally t;
  Gen gen(1001);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    SplitNorm a = gen.norm();
    unsigned long p = a.cfg().prime();
    Vector x = gen.vector(a.dim(), p), y = gen.vector(a.dim(), p);
    t.check(evaluate(a, added(x, y)) <= max(evaluate(a, x), evaluate(a, y)), "ultrametric " + describe(a));

    Rational lam = gen.scalar(p);
    Vector lx = x;
    for (auto& e : lx) e *= lam;
    t.check(evaluate(a, lx) == evaluate(a, x) - Rational(ref_val(lam, p)), "scaling " + describe(a));

    SplitNorm b = gen.norm(static_cast<size_t>(gen.integer(1, 3)), p);
    Vector u = gen.nonzero_vector(a.dim(), p), w = gen.nonzero_vector(b.dim(), p);
    t.check(evaluate(tensor(a, b), kron(u, w)) == evaluate(a, u) + evaluate(b, w), "cross norm " + describe(a));
  }
  return t;
}

Tally stabilizer_oracle() {
  Tally t;
  Gen gen(1002);
  for (int i = 0; i < 500; ++i, ++t.cases) {
    SplitNorm a = gen.norm();
    Matrix g = gen.elementary_product(a);
    t.check(is_stabilizer_element(a, g) == ref_is_stabilizer(a, g), "stabilizer " + describe(a));
  }
  return t;
}

Tally dimension_identity() {
  Tally t;
  Gen gen(1003);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    SplitNorm a = gen.norm();
    size_t n2 = a.dim() * a.dim();
    size_t graded = 0;
    for (const auto& [d, m] : graded_dims(a).class_dims) graded += m;
    t.check(kernel_dim(a) + centralizer_dim(a) == n2, "kernel+centralizer " + describe(a));
    t.check(graded == n2, "graded sum " + describe(a));
  }
  return t;
}

Tally iwahori_cross_check() {
  Tally t;
  FiberStructure f = fiber_structure(std_norm(2, vec({"0", "1/2"})));
  ++t.cases;
  t.check(f.levi_blocks == std::vector<size_t>{1, 1} && f.unipotent_dim == 2 && f.total_dim == 4, "iwahori");
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    for (size_t n = 1; n <= 5; ++n, ++t.cases) {
      FiberStructure h = fiber_structure(beta(n, p));
      t.check(h.levi_blocks == std::vector<size_t>{n} && h.unipotent_dim == 0 && h.total_dim == n * n,
              "hyperspecial n=" + std::to_string(n));
    }
  }
  return t;
}

Tally common_apartment() {
  Tally t;
  Gen gen(1005);
  for (int i = 0; i < 500; ++i, ++t.cases) {
    unsigned long p = gen.prime();
    size_t n = static_cast<size_t>(gen.integer(1, 5));
    bool integral = i % 2 == 0;
    SplitNorm a = integral ? SplitNorm(FieldConfig(p), gen.invertible(n, p), gen.integer_values(n)) : gen.norm(n, p);
    SplitNorm b = integral ? SplitNorm(FieldConfig(p), gen.invertible(n, p), gen.integer_values(n)) : gen.norm(n, p);
    CommonBasis c = common_splitting_basis(a, b);
    t.check(equals(SplitNorm(a.cfg(), c.basis, c.a_values), a), "reconstruct a " + describe(a));
    t.check(equals(SplitNorm(b.cfg(), c.basis, c.b_values), b), "reconstruct b " + describe(b));
    if (!integral) continue;

    // Lattice norms: a = lattice norm of ball(a, 0), and likewise b.
    Matrix la = ref_ball(a, 0), lb = ref_ball(b, 0);
    std::vector<long> ed = elementary_divisor_exponents(la.inverse() * lb, p);
    Vector expected;
    for (auto it = ed.rbegin(); it != ed.rend(); ++it) expected.push_back(*it);
    t.check(cartan_position(a, b) == expected, "elementary divisors " + describe(a));
    Vector diffs = distance(a, b).diffs;
    Vector negated(expected.rbegin(), expected.rend());
    for (auto& x : negated) x = -x;
    t.check(diffs == negated, "distance diffs " + describe(a));
  }
  return t;
}

Tally apartment_bijection() {
  Tally t;
  Gen gen(1006);
  for (int i = 0; i < 500; ++i, ++t.cases) {
    unsigned long p = gen.prime();
    FieldConfig cfg(p);
    size_t n = static_cast<size_t>(gen.integer(1, 5));
    ApartmentPoint x{gen.values(n)};
    SplitNorm theta = norm_from_apartment(x, cfg);
    t.check(apartment_coords(theta, Matrix::identity(n)) == x, "round trip");
    Matrix tor = gen.diagonal(n, p);
    Vector moved = added(x.coords, torus_translation(tor, cfg));
    t.check(apartment_coords(act(tor, theta), Matrix::identity(n)) == ApartmentPoint{moved}, "equivariance");
  }
  return t;
}

Tally splitting_round_trip() {
  Tally t;
  Gen gen(1007);
  for (int i = 0; i < 1000; ++i, ++t.cases) {
    SplitNorm a = gen.norm();
    t.check(equals(norm_from_pair(pair_from_norm(a)), a), "norm -> pair -> norm " + describe(a));

    unsigned long p = gen.prime();
    size_t n = static_cast<size_t>(gen.integer(1, 5));
    SplittingPair pr{LatticeBasis(FieldConfig(p), gen.invertible(n, p)), Vector(n)};
    for (auto& w : pr.weights) w = Rational(gen.integer(0, 5), 6);
    for (auto& w : pr.weights) w.canonicalize();
    SplittingPair back = pair_from_norm(norm_from_pair(pr));
    t.check(equals(norm_from_pair(back), norm_from_pair(pr)) && verify_splitting(norm_from_pair(pr), back),
            "pair -> norm -> pair");
  }
  return t;
}

Tally graded_comparison() {
  Tally t;
  Gen gen(1008);
  for (int i = 0; i < 500; ++i, ++t.cases) {
    SplitNorm a = gen.norm();
    for (const auto& cls : value_classes(a)) {
      for (const auto& [d, dims] : graded_ball_dims(a, cls)) {
        t.check(dims.lhs == dims.rhs, "lhs != rhs " + describe(a) + " degree " + to_string(d));
      }
    }
  }
  return t;
}

Tally gl2_tree() {
  Tally t;
  for (unsigned long p : {2UL, 3UL, 5UL}) {
    Gen gen(1009 + p);
    for (int i = 0; i < 10; ++i, ++t.cases) {
      SplitNorm v = shift(lattice_norm(LatticeBasis(FieldConfig(p), gen.invertible(2, p))), Rational(gen.integer(0, 5), 6));
      auto nb = tree_neighbors(v);
      t.check(nb.size() == p + 1, "neighbor count");
      for (size_t a = 0; a < nb.size(); ++a) {
        t.check(cartan_position(v, nb[a]) == vec({"1", "0"}), "cartan (1,0)");
        for (size_t b = a + 1; b < nb.size(); ++b) t.check(!homothetic(nb[a], nb[b]), "distinct");
        bool back = false;
        for (const auto& w : tree_neighbors(nb[a])) back = back || homothetic(w, v);
        t.check(back, "neighbor of neighbor");
      }
    }
  }
  return t;
}

Tally cli_determinism() {
  Tally t;
  std::string dir = std::string(BTNORM_GOLDEN_DIR) + "/corpus";
  t.cases = static_cast<long>(cli::corpus(dir).size());
  std::string first = cli::transcript(BTNORM_CLI_PATH, dir);
  std::string second = cli::transcript(BTNORM_CLI_PATH, dir);
  std::ifstream in(std::string(BTNORM_GOLDEN_DIR) + "/transcript.txt", std::ios::binary);
  std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  t.check(t.cases == 20, "corpus size " + std::to_string(t.cases));
  t.check(first == second, "two runs differ");
  t.check(first == golden, "transcript differs from golden file");
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"norm axioms (ultrametric, scaling, tensor cross norm)", norm_axioms},
      {"stabilizer vs brute-force ball preservation", stabilizer_oracle},
      {"kernel + centralizer = n^2 and graded dims sum to n^2", dimension_identity},
      {"Iwahori and hyperspecial fiber structure", iwahori_cross_check},
      {"common splitting basis self-check and elementary divisors", common_apartment},
      {"apartment round trip and torus equivariance", apartment_bijection},
      {"splitting pair round trips", splitting_round_trip},
      {"graded ball dimensions lhs = rhs", graded_comparison},
      {"GL_2 tree neighbors", gl2_tree},
      {"CLI golden transcript determinism", cli_determinism},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = criteria[k].second();
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("%s %2zu  %-58s cases=%-5ld failures=%ld tolerance=0 time=%.2fs%s%s\n", ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), t.cases, t.failures, secs, ok ? "" : "  first: ", t.first_failure.c_str());
  }
  return failed == 0 ? 0 : 1;
}
