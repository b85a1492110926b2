#include "btnorm.h"

#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <optional>
#include <string>

#include "btnorm/base_change.hpp"
#include "btnorm/building.hpp"
#include "btnorm/document.hpp"
#include "btnorm/error.hpp"
#include "btnorm/stabilizer.hpp"

using namespace btnorm;
using json = nlohmann::json;

struct btn_norm {
  SplitNorm norm;
  std::optional<std::string> label;
};

namespace {

thread_local std::string last_error;

template <class F>
btn_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return BTN_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<btn_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BTN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BTN_ERR_INTERNAL;
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw Error(static_cast<Errc>(BTN_ERR_ARGUMENT), std::string("null argument: ") + name);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

btn_norm* wrap(SplitNorm norm) { return new btn_norm{std::move(norm), std::nullopt}; }

const SplitNorm& unwrap(const btn_norm* h, const char* name) {
  require(h, name);
  return h->norm;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json columns_json(const Matrix& m) {
  json out = json::array();
  for (const auto& c : m.columns()) out.push_back(to_json(c));
  return out;
}

json sizes_json(const std::vector<size_t>& v) {
  json out = json::array();
  for (size_t x : v) out.push_back(x);
  return out;
}

void emit(char** out, const json& j) {
  require(out, "out");
  *out = copy_string(j.dump());
}

Matrix square_matrix(const char* text, size_t n, const char* name) {
  require(text, name);
  Matrix m = parse_matrix(text);
  if (m.rows() != n || m.cols() != n) {
    fail(Errc::dimension_mismatch, std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  return m;
}

RamIndex ram_index(unsigned long e) { return e == 0 ? RamIndex::unbounded() : RamIndex(e); }

}  // namespace

extern "C" {

const char* btn_version(void) { return "1.0.0"; }

const char* btn_last_error(void) { return last_error.c_str(); }

const char* btn_status_name(btn_status status) {
  switch (status) {
    case BTN_OK: return "ok";
    case BTN_ERR_MALFORMED: return "malformed input";
    case BTN_ERR_DIMENSION: return "dimension mismatch";
    case BTN_ERR_SINGULAR: return "singular matrix";
    case BTN_ERR_CONFIG: return "configuration mismatch";
    case BTN_ERR_PRECONDITION: return "precondition violated";
    case BTN_ERR_INTERNAL: return "internal error";
    case BTN_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

void btn_string_free(char* s) { std::free(s); }

btn_status btn_val(unsigned long prime, const char* x, char** out_value) {
  return guard([&] {
    require(x, "x");
    require(out_value, "out_value");
    *out_value = copy_string(to_string(val(parse_rational(x), FieldConfig(prime))));
  });
}

btn_status btn_class_of(const char* value, unsigned long e, char** out_class) {
  return guard([&] {
    require(value, "value");
    require(out_class, "out_class");
    *out_class = copy_string(to_string(class_of(parse_value(value), ram_index(e)).representative));
  });
}

btn_status btn_in_fundamental_interval(const char* d, int* out_bool) {
  return guard([&] {
    require(d, "d");
    require(out_bool, "out_bool");
    *out_bool = in_fundamental_interval(parse_rational(d)) ? 1 : 0;
  });
}

btn_status btn_value_compare(const char* a, const char* b, int* out_sign) {
  return guard([&] {
    require(a, "a");
    require(b, "b");
    require(out_sign, "out_sign");
    auto order = parse_value(a) <=> parse_value(b);
    *out_sign = order < 0 ? -1 : order > 0 ? 1 : 0;
  });
}

btn_status btn_norm_parse(const char* document, btn_norm** out) {
  return guard([&] {
    require(document, "document");
    require(out, "out");
    NormDocument doc = parse_norm_document(document);
    *out = new btn_norm{std::move(doc.norm), std::move(doc.label)};
  });
}

btn_status btn_norm_serialize(const btn_norm* norm, const char* label, char** out_document) {
  return guard([&] {
    require(norm, "norm");
    require(out_document, "out_document");
    std::optional<std::string> l = label ? std::optional<std::string>(label) : norm->label;
    *out_document = copy_string(serialize_norm_document(norm->norm, l));
  });
}

btn_status btn_norm_create(unsigned long prime, const char* basis_vectors, const char* values, btn_norm** out) {
  return guard([&] {
    require(basis_vectors, "basis_vectors");
    require(values, "values");
    require(out, "out");
    Vector v = parse_vector(values);
    *out = wrap(SplitNorm(FieldConfig(prime), parse_vector_list(basis_vectors, v.size()), v));
  });
}

void btn_norm_free(btn_norm* norm) { delete norm; }

void btn_norm_array_free(btn_norm** norms, size_t count) {
  if (norms == nullptr) return;
  for (size_t i = 0; i < count; ++i) delete norms[i];
  std::free(norms);
}

size_t btn_norm_dim(const btn_norm* norm) { return norm ? norm->norm.dim() : 0; }

unsigned long btn_norm_prime(const btn_norm* norm) { return norm ? norm->norm.cfg().prime() : 0; }

btn_status btn_evaluate(const btn_norm* norm, const char* vector, char** out_value) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(vector, "vector");
    require(out_value, "out_value");
    *out_value = copy_string(to_string(evaluate(n, parse_vector(vector))));
  });
}

btn_status btn_lattice_norm(unsigned long prime, const char* lattice_vectors, btn_norm** out) {
  return guard([&] {
    require(lattice_vectors, "lattice_vectors");
    require(out, "out");
    Matrix cols = parse_matrix(lattice_vectors).transpose();
    *out = wrap(lattice_norm(LatticeBasis(FieldConfig(prime), cols)));
  });
}

btn_status btn_ball(const btn_norm* norm, const char* gamma, int open, char** out_json) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(gamma, "gamma");
    Rational g = parse_rational(gamma);
    LatticeBasis ball = open ? ball_basis_open(n, g) : ball_basis(n, g);
    emit(out_json, json{{"lattice", columns_json(ball.matrix())}});
  });
}

btn_status btn_act(const char* g, const btn_norm* norm, btn_norm** out) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(out, "out");
    *out = wrap(act(square_matrix(g, n.dim(), "g"), n));
  });
}

btn_status btn_equals(const btn_norm* a, const btn_norm* b, int* out_bool) {
  return guard([&] {
    require(out_bool, "out_bool");
    *out_bool = equals(unwrap(a, "a"), unwrap(b, "b")) ? 1 : 0;
  });
}

btn_status btn_tensor(const btn_norm* a, const btn_norm* b, btn_norm** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(tensor(unwrap(a, "a"), unwrap(b, "b")));
  });
}

btn_status btn_dual(const btn_norm* norm, btn_norm** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(dual(unwrap(norm, "norm")));
  });
}

btn_status btn_direct_sum(const btn_norm* a, const btn_norm* b, btn_norm** out) {
  return guard([&] {
    require(out, "out");
    *out = wrap(direct_sum(unwrap(a, "a"), unwrap(b, "b")));
  });
}

btn_status btn_restrict(const btn_norm* norm, const char* span_vectors, btn_norm** out) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(span_vectors, "span_vectors");
    require(out, "out");
    *out = wrap(restrict(n, parse_vector_list(span_vectors, n.dim())));
  });
}

btn_status btn_quotient(const btn_norm* norm, const char* span_vectors, btn_norm** out, char** out_complement_json) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(span_vectors, "span_vectors");
    require(out, "out");
    QuotientResult q = quotient(n, parse_vector_list(span_vectors, n.dim()));
    if (out_complement_json) *out_complement_json = copy_string(json{{"complement", columns_json(q.complement)}}.dump());
    *out = wrap(std::move(q.norm));
  });
}

btn_status btn_common_basis(const btn_norm* a, const btn_norm* b, char** out_json) {
  return guard([&] {
    CommonBasis c = common_splitting_basis(unwrap(a, "a"), unwrap(b, "b"));
    emit(out_json, json{{"basis", columns_json(c.basis)}, {"a_values", to_json(c.a_values)}, {"b_values", to_json(c.b_values)}});
  });
}

btn_status btn_distance(const btn_norm* a, const btn_norm* b, char** out_json) {
  return guard([&] {
    Distance d = distance(unwrap(a, "a"), unwrap(b, "b"));
    emit(out_json, json{{"d_inf", to_string(d.d_inf)}, {"diffs", to_json(d.diffs)}});
  });
}

btn_status btn_pair_from_norm(const btn_norm* norm, char** out_pair_document) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(out_pair_document, "out_pair_document");
    *out_pair_document = copy_string(serialize_pair_document(pair_from_norm(n)));
  });
}

btn_status btn_norm_from_pair(const char* pair_document, btn_norm** out) {
  return guard([&] {
    require(pair_document, "pair_document");
    require(out, "out");
    *out = wrap(norm_from_pair(parse_pair_document(pair_document)));
  });
}

btn_status btn_translate_pair(const char* g, const char* pair_document, char** out_pair_document) {
  return guard([&] {
    require(pair_document, "pair_document");
    require(out_pair_document, "out_pair_document");
    SplittingPair pair = parse_pair_document(pair_document);
    Matrix m = square_matrix(g, pair.lattice.dim(), "g");
    *out_pair_document = copy_string(serialize_pair_document(translate_pair(m, pair)));
  });
}

btn_status btn_verify_splitting(const btn_norm* norm, const char* pair_document, int* out_bool) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(pair_document, "pair_document");
    require(out_bool, "out_bool");
    SplittingPair pair = parse_pair_document(pair_document);
    if (pair.lattice.cfg() != n.cfg()) fail(Errc::config_mismatch, "pair and norm use different primes");
    *out_bool = verify_splitting(n, pair) ? 1 : 0;
  });
}

btn_status btn_hom_norm(const btn_norm* norm, const char* h, char** out_value) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(out_value, "out_value");
    *out_value = copy_string(to_string(hom_norm(n, square_matrix(h, n.dim(), "h"))));
  });
}

btn_status btn_is_stabilizer(const btn_norm* norm, const char* g, int* out_bool) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(out_bool, "out_bool");
    *out_bool = is_stabilizer_element(n, square_matrix(g, n.dim(), "g")) ? 1 : 0;
  });
}

btn_status btn_graded_dims(const btn_norm* norm, char** out_json) {
  return guard([&] {
    GradedOrderSummary s = graded_dims(unwrap(norm, "norm"));
    json dims = json::array();
    for (const auto& [degree, dim] : s.class_dims) dims.push_back(json::array({to_string(degree), dim}));
    emit(out_json, json{{"class_dims", dims}, {"n", s.n}});
  });
}

btn_status btn_fiber_structure(const btn_norm* norm, char** out_json) {
  return guard([&] {
    FiberStructure f = fiber_structure(unwrap(norm, "norm"));
    emit(out_json, json{{"levi_blocks", sizes_json(f.levi_blocks)},
                        {"unipotent_dim", f.unipotent_dim},
                        {"total_dim", f.total_dim}});
  });
}

btn_status btn_chain_period(const btn_norm* norm, char** out_json) {
  return guard([&] {
    BallChainPeriod c = chain_period(unwrap(norm, "norm"));
    json lattices = json::array();
    json certs = json::array();
    for (const auto& l : c.lattices) lattices.push_back(columns_json(l.matrix()));
    for (const auto& m : c.certificates) certs.push_back(columns_json(m));
    emit(out_json, json{{"classes", to_json(c.classes)}, {"lattices", lattices}, {"certificates", certs}});
  });
}

btn_status btn_filtration_level(const btn_norm* norm, const char* g, char** out_value) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(out_value, "out_value");
    *out_value = copy_string(to_string(filtration_level(n, square_matrix(g, n.dim(), "g"))));
  });
}

btn_status btn_chi_weights(const btn_norm* norm, char** out_json) {
  return guard([&] {
    WeightMultiset w = chi_weights(unwrap(norm, "norm"));
    json weights = json::array();
    for (const auto& [cls, m] : w.weights) weights.push_back(json::array({to_string(cls), m}));
    emit(out_json, json{{"weights", weights}});
  });
}

btn_status btn_centralizer_dim(const btn_norm* norm, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = centralizer_dim(unwrap(norm, "norm"));
  });
}

btn_status btn_kernel_dim(const btn_norm* norm, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = kernel_dim(unwrap(norm, "norm"));
  });
}

btn_status btn_graded_ball_dims(const btn_norm* norm, const char* gamma, char** out_json) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(gamma, "gamma");
    json dims = json::array();
    for (const auto& [degree, d] : graded_ball_dims(n, parse_rational(gamma))) {
      dims.push_back(json::array({to_string(degree), d.lhs, d.rhs}));
    }
    emit(out_json, json{{"dims", dims}});
  });
}

btn_status btn_refined_chain_length(const btn_norm* norm, unsigned long e, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = refined_chain_length(unwrap(norm, "norm"), VirtualExtension{ram_index(e)});
  });
}

btn_status btn_norm_from_apartment(unsigned long prime, const char* coords, btn_norm** out) {
  return guard([&] {
    require(coords, "coords");
    require(out, "out");
    *out = wrap(norm_from_apartment(ApartmentPoint{parse_vector(coords)}, FieldConfig(prime)));
  });
}

btn_status btn_apartment_coords(const btn_norm* norm, const char* frame_vectors, char** out_json) {
  return guard([&] {
    const SplitNorm& n = unwrap(norm, "norm");
    require(frame_vectors, "frame_vectors");
    auto x = apartment_coords(n, parse_vector_list(frame_vectors, n.dim()));
    emit(out_json, x ? to_json(x->coords) : json(nullptr));
  });
}

btn_status btn_torus_translation(unsigned long prime, const char* t, char** out_vector) {
  return guard([&] {
    require(t, "t");
    require(out_vector, "out_vector");
    Vector v = torus_translation(parse_matrix(t), FieldConfig(prime));
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    *out_vector = copy_string(s);
  });
}

btn_status btn_cartan_position(const btn_norm* a, const btn_norm* b, char** out_json) {
  return guard([&] { emit(out_json, to_json(cartan_position(unwrap(a, "a"), unwrap(b, "b")))); });
}

btn_status btn_point_type(const btn_norm* norm, char** out_json) {
  return guard([&] { emit(out_json, sizes_json(point_type(unwrap(norm, "norm")))); });
}

btn_status btn_homothetic(const btn_norm* a, const btn_norm* b, int* out_bool) {
  return guard([&] {
    require(out_bool, "out_bool");
    *out_bool = homothetic(unwrap(a, "a"), unwrap(b, "b")) ? 1 : 0;
  });
}

btn_status btn_tree_neighbors(const btn_norm* vertex, btn_norm*** out, size_t* out_count) {
  return guard([&] {
    require(out, "out");
    require(out_count, "out_count");
    std::vector<SplitNorm> neighbors = tree_neighbors(unwrap(vertex, "vertex"));
    auto** arr = static_cast<btn_norm**>(std::calloc(neighbors.size(), sizeof(btn_norm*)));
    if (arr == nullptr) throw std::bad_alloc();
    for (size_t i = 0; i < neighbors.size(); ++i) arr[i] = wrap(std::move(neighbors[i]));
    *out = arr;
    *out_count = neighbors.size();
  });
}

}  // extern "C"
