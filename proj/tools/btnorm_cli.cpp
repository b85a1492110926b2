// btnorm: command-line front end over the C API.
//
// Exit status: 0 on success, 1 for malformed input or usage errors, 2 when a
// precondition of the requested operation is violated.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "btnorm.h"

using json = nlohmann::json;

namespace {

struct CliFailure {
  int exit_code;
  std::string message;
};

struct NormDeleter {
  void operator()(btn_norm* n) const { btn_norm_free(n); }
};
using NormPtr = std::unique_ptr<btn_norm, NormDeleter>;

int exit_code_for(btn_status s) {
  switch (s) {
    case BTN_OK: return 0;
    case BTN_ERR_MALFORMED:
    case BTN_ERR_ARGUMENT: return 1;
    default: return 2;
  }
}

void check(btn_status s) {
  if (s != BTN_OK) throw CliFailure{exit_code_for(s), std::string(btn_status_name(s)) + ": " + btn_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  btn_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{1, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NormPtr load_norm(const std::string& path) {
  btn_norm* n = nullptr;
  btn_status s = btn_norm_parse(read_file(path).c_str(), &n);
  if (s != BTN_OK) throw CliFailure{1, path + ": " + btn_status_name(s) + ": " + btn_last_error()};
  return NormPtr(n);
}

std::string document(const btn_norm* n) {
  char* out = nullptr;
  check(btn_norm_serialize(n, nullptr, &out));
  return take(out);
}

NormPtr adopt(btn_norm* n) { return NormPtr(n); }

std::string tuple(const json& arr) {
  std::string s = "(";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + ")";
}

std::string columns_text(const json& cols) {
  std::string s;
  for (size_t i = 0; i < cols.size(); ++i) s += (i ? ";" : "") + tuple(cols[i]);
  return s;
}

std::string pairs_text(const json& pairs) {
  std::string s;
  for (size_t i = 0; i < pairs.size(); ++i) {
    s += (i ? " " : "") + pairs[i][0].get<std::string>() + ":" + pairs[i][1].dump();
  }
  return s;
}

json scalar_json(const std::string& value) { return json{{"value", value}}; }

json bool_json(bool b) { return json{{"value", b}}; }

struct Options {
  std::string format = "text";
  unsigned long prime = 0;
  std::string at = "0";
  std::string delta;
  unsigned long ram_index = 0;
  std::string vector;
  std::string matrix;
  std::string span;
  std::string frame;
  std::string coords;
  bool open = false;
  std::vector<std::string> inputs;
};

class Runner {
 public:
  explicit Runner(const Options& opt) : opt_(opt) {}

  void emit_text_or_json(const std::string& text, const json& machine) const {
    if (opt_.format == "machine") {
      std::cout << machine.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }

  void emit_norm(const btn_norm* n) const { std::cout << document(n); }

  void need_inputs(size_t k) const {
    if (opt_.inputs.size() != k) {
      throw CliFailure{1, "expected " + std::to_string(k) + " input document(s), got " + std::to_string(opt_.inputs.size())};
    }
  }

  NormPtr input(size_t i) const { return load_norm(opt_.inputs.at(i)); }

  void need(const std::string& value, const char* flag) const {
    if (value.empty()) throw CliFailure{1, std::string("missing required flag ") + flag};
  }

  void need_prime() const {
    if (opt_.prime == 0) throw CliFailure{1, "missing required flag --prime"};
  }

  void run(const std::string& verb) const;

 private:
  const Options& opt_;
};

void Runner::run(const std::string& verb) const {
  char* out = nullptr;
  int flag = 0;
  size_t count = 0;
  btn_norm* result = nullptr;

  if (verb == "eval") {
    need_inputs(1);
    need(opt_.vector, "--vector");
    auto n = input(0);
    check(btn_evaluate(n.get(), opt_.vector.c_str(), &out));
    std::string v = take(out);
    emit_text_or_json(v, scalar_json(v));
  } else if (verb == "tensor" || verb == "sum") {
    need_inputs(2);
    auto a = input(0), b = input(1);
    check(verb == "tensor" ? btn_tensor(a.get(), b.get(), &result) : btn_direct_sum(a.get(), b.get(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "dual") {
    need_inputs(1);
    auto n = input(0);
    check(btn_dual(n.get(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "restrict") {
    need_inputs(1);
    auto n = input(0);
    check(btn_restrict(n.get(), opt_.span.c_str(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "quotient") {
    need_inputs(1);
    auto n = input(0);
    check(btn_quotient(n.get(), opt_.span.c_str(), &result, &out));
    auto q = adopt(result);
    json complement = json::parse(take(out));
    if (opt_.format == "machine") {
      std::cout << json{{"complement", complement["complement"]}, {"norm", json::parse(document(q.get()))}}.dump() << "\n";
    } else {
      std::cout << "complement=" << columns_text(complement["complement"]) << "\n" << document(q.get());
    }
  } else if (verb == "act") {
    need_inputs(1);
    need(opt_.matrix, "--matrix");
    auto n = input(0);
    check(btn_act(opt_.matrix.c_str(), n.get(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "equals" || verb == "homothetic") {
    need_inputs(2);
    auto a = input(0), b = input(1);
    check(verb == "equals" ? btn_equals(a.get(), b.get(), &flag) : btn_homothetic(a.get(), b.get(), &flag));
    emit_text_or_json(flag ? "true" : "false", bool_json(flag));
  } else if (verb == "ball") {
    need_inputs(1);
    auto n = input(0);
    check(btn_ball(n.get(), opt_.at.c_str(), opt_.open ? 1 : 0, &out));
    json j = json::parse(take(out));
    emit_text_or_json("lattice=" + columns_text(j["lattice"]), j);
  } else if (verb == "chain") {
    need_inputs(1);
    auto n = input(0);
    check(btn_chain_period(n.get(), &out));
    json j = json::parse(take(out));
    std::string text;
    for (size_t k = 0; k < j["classes"].size(); ++k) {
      text += (k ? "\n" : "") + std::string("ball(") + j["classes"][k].get<std::string>() + ")=" + columns_text(j["lattices"][k]);
    }
    emit_text_or_json(text, j);
  } else if (verb == "stab-check") {
    need_inputs(1);
    need(opt_.matrix, "--matrix");
    auto n = input(0);
    check(btn_is_stabilizer(n.get(), opt_.matrix.c_str(), &flag));
    emit_text_or_json(flag ? "true" : "false", bool_json(flag));
  } else if (verb == "hom") {
    need_inputs(1);
    need(opt_.matrix, "--matrix");
    auto n = input(0);
    check(btn_hom_norm(n.get(), opt_.matrix.c_str(), &out));
    std::string v = take(out);
    emit_text_or_json(v, scalar_json(v));
  } else if (verb == "graded-dims") {
    need_inputs(1);
    auto n = input(0);
    check(btn_graded_dims(n.get(), &out));
    json j = json::parse(take(out));
    emit_text_or_json(pairs_text(j["class_dims"]), j);
  } else if (verb == "fiber") {
    need_inputs(1);
    auto n = input(0);
    check(btn_fiber_structure(n.get(), &out));
    json j = json::parse(take(out));
    std::string text = "levi=" + j["levi_blocks"].dump() + " unipotent=" + j["unipotent_dim"].dump() +
                       " total=" + j["total_dim"].dump();
    emit_text_or_json(text, j);
  } else if (verb == "level") {
    need_inputs(1);
    need(opt_.matrix, "--matrix");
    auto n = input(0);
    check(btn_filtration_level(n.get(), opt_.matrix.c_str(), &out));
    std::string level = take(out);
    json j = scalar_json(level);
    std::string text = level;
    if (!opt_.delta.empty()) {
      check(btn_in_fundamental_interval(opt_.delta.c_str(), &flag));
      if (!flag) throw CliFailure{2, "precondition violated: --delta must lie in (-1, 0]"};
      int sign = 0;
      check(btn_value_compare(level.c_str(), opt_.delta.c_str(), &sign));
      j["member"] = sign <= 0;
      text += std::string(" member=") + (sign <= 0 ? "true" : "false");
    }
    emit_text_or_json(text, j);
  } else if (verb == "chi-weights") {
    need_inputs(1);
    auto n = input(0);
    check(btn_chi_weights(n.get(), &out));
    json j = json::parse(take(out));
    emit_text_or_json(pairs_text(j["weights"]), j);
  } else if (verb == "bc-dims") {
    need_inputs(1);
    auto n = input(0);
    size_t centralizer = 0, kernel = 0, refined = 0;
    check(btn_chi_weights(n.get(), &out));
    json weights = json::parse(take(out))["weights"];
    check(btn_centralizer_dim(n.get(), &centralizer));
    check(btn_kernel_dim(n.get(), &kernel));
    check(btn_graded_ball_dims(n.get(), opt_.at.c_str(), &out));
    json graded = json::parse(take(out))["dims"];
    check(btn_refined_chain_length(n.get(), opt_.ram_index, &refined));
    std::string graded_text;
    for (size_t i = 0; i < graded.size(); ++i) {
      graded_text += (i ? " " : "") + graded[i][0].get<std::string>() + ":(" + graded[i][1].dump() + "," +
                     graded[i][2].dump() + ")";
    }
    json j{{"chi_weights", weights},
           {"centralizer_dim", centralizer},
           {"kernel_dim", kernel},
           {"graded_ball_dims", graded},
           {"refined_chain_length", refined}};
    std::string text = "chi=" + pairs_text(weights) + "\ncentralizer=" + std::to_string(centralizer) +
                       "\nkernel=" + std::to_string(kernel) + "\ngraded(" + opt_.at + ")=" + graded_text +
                       "\nrefined_chain=" + std::to_string(refined);
    emit_text_or_json(text, j);
  } else if (verb == "apartment") {
    need_inputs(0);
    need_prime();
    check(btn_norm_from_apartment(opt_.prime, opt_.coords.c_str(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "coords") {
    need_inputs(1);
    auto n = input(0);
    std::string frame = opt_.frame;
    if (frame.empty()) {
      for (size_t i = 0; i < btn_norm_dim(n.get()); ++i) {
        if (i) frame += ";";
        for (size_t j = 0; j < btn_norm_dim(n.get()); ++j) frame += std::string(j ? "," : "") + (i == j ? "1" : "0");
      }
    }
    check(btn_apartment_coords(n.get(), frame.c_str(), &out));
    json j = json::parse(take(out));
    emit_text_or_json(j.is_null() ? "none" : tuple(j), json{{"coords", j}});
  } else if (verb == "translate") {
    need_inputs(0);
    need_prime();
    need(opt_.matrix, "--matrix");
    check(btn_torus_translation(opt_.prime, opt_.matrix.c_str(), &out));
    std::string v = take(out);
    json arr = json::array();
    std::stringstream ss(v);
    for (std::string item; std::getline(ss, item, ',');) arr.push_back(item);
    emit_text_or_json(tuple(arr), json{{"translation", arr}});
  } else if (verb == "cartan" || verb == "distance" || verb == "common") {
    need_inputs(2);
    auto a = input(0), b = input(1);
    if (verb == "cartan") {
      check(btn_cartan_position(a.get(), b.get(), &out));
      json j = json::parse(take(out));
      emit_text_or_json(tuple(j), json{{"position", j}});
    } else if (verb == "distance") {
      check(btn_distance(a.get(), b.get(), &out));
      json j = json::parse(take(out));
      emit_text_or_json("d_inf=" + j["d_inf"].get<std::string>() + " diffs=" + tuple(j["diffs"]), j);
    } else {
      check(btn_common_basis(a.get(), b.get(), &out));
      json j = json::parse(take(out));
      emit_text_or_json("basis=" + columns_text(j["basis"]) + "\na_values=" + tuple(j["a_values"]) +
                            "\nb_values=" + tuple(j["b_values"]),
                        j);
    }
  } else if (verb == "type") {
    need_inputs(1);
    auto n = input(0);
    check(btn_point_type(n.get(), &out));
    json j = json::parse(take(out));
    std::string kind = j.size() == 1 ? "hyperspecial" : j.size() == btn_norm_dim(n.get()) ? "iwahori" : "parahoric";
    if (btn_norm_dim(n.get()) == 1) kind = "hyperspecial";
    emit_text_or_json(tuple(j) + " " + kind, json{{"type", j}, {"kind", kind}});
  } else if (verb == "tree") {
    need_inputs(1);
    auto n = input(0);
    btn_norm** neighbors = nullptr;
    check(btn_tree_neighbors(n.get(), &neighbors, &count));
    json arr = json::array();
    try {
      for (size_t i = 0; i < count; ++i) arr.push_back(json::parse(document(neighbors[i])));
    } catch (...) {
      btn_norm_array_free(neighbors, count);
      throw;
    }
    btn_norm_array_free(neighbors, count);
    std::cout << (opt_.format == "machine" ? arr.dump() : arr.dump(2)) << "\n";
  } else if (verb == "pair") {
    need_inputs(1);
    auto n = input(0);
    check(btn_pair_from_norm(n.get(), &out));
    std::cout << take(out);
  } else if (verb == "from-pair") {
    need_inputs(1);
    check(btn_norm_from_pair(read_file(opt_.inputs[0]).c_str(), &result));
    emit_norm(adopt(result).get());
  } else if (verb == "verify-pair") {
    need_inputs(2);
    auto n = input(0);
    check(btn_verify_splitting(n.get(), read_file(opt_.inputs[1]).c_str(), &flag));
    emit_text_or_json(flag ? "true" : "false", bool_json(flag));
  } else {
    throw CliFailure{1, "unknown verb '" + verb + "'"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with splittable p-adic norms"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));

  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"eval", "evaluate a norm at --vector"},
      {"tensor", "tensor product of two norms"},
      {"dual", "dual norm"},
      {"sum", "direct sum of two norms"},
      {"restrict", "restriction to the subspace spanned by --span"},
      {"quotient", "quotient by the subspace spanned by --span"},
      {"act", "push a norm forward by --matrix"},
      {"equals", "equality of two norms"},
      {"ball", "lattice basis of the ball at --at (--open for the open ball)"},
      {"chain", "one period of the ball lattice chain"},
      {"stab-check", "whether --matrix stabilizes the norm"},
      {"hom", "operator norm of --matrix"},
      {"graded-dims", "graded dimensions of the stabilizer order"},
      {"fiber", "Levi and unipotent dimensions of the special fiber"},
      {"level", "filtration level of --matrix (membership for --delta)"},
      {"chi-weights", "weight multiset of the residual character"},
      {"bc-dims", "base-change dimension bookkeeping"},
      {"apartment", "norm of the standard apartment at --coords"},
      {"coords", "apartment coordinates in --frame"},
      {"translate", "translation vector of the diagonal --matrix"},
      {"cartan", "relative position of two norms"},
      {"distance", "sup distance and difference vector of two norms"},
      {"common", "common splitting basis of two norms"},
      {"homothetic", "whether two norms differ by an integer shift"},
      {"type", "point type (class multiplicities)"},
      {"tree", "neighbors of a vertex in the tree of GL_2"},
      {"pair", "lattice/weight pair of a norm"},
      {"from-pair", "norm of a lattice/weight pair document"},
      {"verify-pair", "check a pair document against a norm"},
  };
  for (const auto& [name, help] : verbs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--prime", opt.prime, "residue characteristic");
    sub->add_option("--at", opt.at, "ball radius gamma");
    sub->add_option("--delta", opt.delta, "filtration level in (-1, 0]");
    sub->add_option("--ram-index", opt.ram_index, "ramification index (0 = unbounded)");
    sub->add_option("--vector", opt.vector, "comma-separated rationals");
    sub->add_option("--matrix", opt.matrix, "row-major, rows separated by ';'");
    sub->add_option("--span", opt.span, "vectors separated by ';'");
    sub->add_option("--frame", opt.frame, "frame vectors separated by ';'");
    sub->add_option("--coords", opt.coords, "apartment coordinates");
    sub->add_flag("--open", opt.open, "use the open ball");
    sub->add_option("--format", opt.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("inputs", opt.inputs, "input documents");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Runner(opt).run(app.get_subcommands().front()->get_name());
  } catch (const CliFailure& f) {
    std::cout.flush();
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
