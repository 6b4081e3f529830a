#include "commands.hpp"

#include <CLI11.hpp>
#include <functional>
#include <sstream>

#include "corpus.hpp"
#include "json_io.hpp"
#include "ncequiv/equiv.hpp"
#include "ncequiv/numeric.hpp"

namespace ncequiv::cli {

namespace {

struct RunConfig {
  std::string field = "Q";
  std::string vars;
  std::uint64_t seed = 1;
  std::size_t min_size = 1, max_size = 5, samples = 50, max_deg = 12;
  double tol = 1e-8;
  bool json = false;
  bool high_precision = false;

  RefuterConfig refuter() const {
    RefuterConfig c;
    c.min_size = min_size;
    c.max_size = max_size;
    c.samples = samples;
    c.seed = seed;
    c.tolerance = tol;
    c.high_precision = high_precision;
    return c;
  }
  EquivOptions equiv() const {
    EquivOptions o;
    o.max_degree = max_deg;
    o.seed = seed;
    o.refuter = refuter();
    return o;
  }
};

// Parsed polynomial arguments together with the naming context.
struct Inputs {
  FieldPtr field;
  VarNames vars;
  std::vector<NcPoly> polys;
};

VarNames split_names(const std::string& s) {
  VarNames v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) v.push_back(item);
  return v;
}

Inputs parse_inputs(const RunConfig& cfg, const std::vector<std::string>& srcs) {
  Inputs in;
  in.field = parse_field(cfg.field);
  in.vars = cfg.vars.empty() ? infer_varnames(srcs, in.field) : split_names(cfg.vars);
  for (const auto& s : srcs) {
    in.polys.push_back(parse(s, in.vars, in.field));
    in.field = common_field(in.field, in.polys.back().field());
  }
  return in;
}

json header(const std::string& command, const Inputs& in) {
  json rep;
  rep["command"] = command;
  rep["field"] = in.field->declaration();
  rep["vars"] = in.vars;
  return rep;
}

json witness_or_null(const std::optional<RefutationWitness>& w) { return w ? to_json(*w) : json(nullptr); }

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << indent << it.key() << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << indent << "  [" << i << "]\n";
        render_text(v[i], out, indent + "    ");
      }
    } else if (v.is_string()) {
      out << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

int emit(const RunConfig& cfg, json rep, int code, std::ostream& out) {
  rep["exit_code"] = code;
  if (cfg.json) {
    out << rep.dump(2) << "\n";
  } else {
    render_text(rep, out, "");
  }
  return code;
}

json chain_json(const std::vector<ChainStep>& steps, const VarNames& vars) {
  json arr = json::array();
  for (const auto& s : steps)
    arr.push_back({{"lambda", s.lambda.to_string()},
                   {"a", print(s.a, vars)},
                   {"b", print(s.b, vars)},
                   {"from", print(s.from, vars)},
                   {"to", print(s.to, vars)}});
  return arr;
}

// Re-checks the certificate of a report by expansion.
bool verify_certificate(const json& rep, const json& c, std::string& detail) {
  FieldPtr field = parse_field(rep.at("field").get<std::string>());
  VarNames vars = rep.at("vars").get<VarNames>();
  auto P = [&](const json& s) { return parse(s.get<std::string>(), vars, field); };
  auto S = [&](const json& s) { return parse_scalar(s.get<std::string>(), field); };
  const std::string type = c.at("type").get<std::string>();
  detail = type;
  if (type == "padded-rank") {
    LinearPencil lambda = pencil_from_json(rep.at("pencil"));
    std::vector<Matrix> t = matrices_from_json(rep.at("tuple"));
    PaddedPencil pp = pad_pencil(lambda, t, 0);
    MatrixTuple y = tuple_from_json(c.at("point"));
    if (y.mats.empty()) y.size = 1;
    std::size_t r = rank(pencil_eval(pp.pencil, y));
    return pp.claimed_rank == c.at("claimed_rank").get<std::size_t>() &&
           (r + y.size - 1) / y.size == pp.claimed_rank;
  }
  if (type == "similarity") {
    MatrixTuple a = tuple_from_json(rep.at("a")), b = tuple_from_json(rep.at("b"));
    JointSimilarity js;
    js.verdict = Similarity::Similar;
    js.p = matrix_from_json(c.at("P"), common_field(a.field(), b.field()));
    return js.verify(a, b);
  }
  const NcPoly f = P(rep.at("f"));
  const NcPoly g = rep.contains("g") ? P(rep.at("g")) : NcPoly();
  if (type == "intertwiner") {
    NcPoly a = P(c.at("a"));
    return !a.is_zero() && f * a == a * g;
  }
  if (type == "equality") return f == g;
  if (type == "commuting") return P(rep.at("a")) * P(rep.at("b")) == P(rep.at("b")) * P(rep.at("a"));
  if (type == "unimodular-scaling") {
    Scalar z = S(c.at("zeta"));
    return g == z * f && (z * z.conj()).is_one();
  }
  if (type == "stable-association") {
    NcPoly a = P(c.at("a")), b = P(c.at("b"));
    const json& r = c.at("right");
    const json& l = c.at("left");
    return f * a == b * g && f * P(r.at("u")) + b * P(r.at("v")) == NcPoly(Scalar(1)) &&
           P(l.at("u")) * a + P(l.at("v")) * g == NcPoly(Scalar(1));
  }
  if (type == "chain") {
    std::vector<ChainStep> steps;
    for (const auto& s : c.at("steps")) steps.push_back({S(s.at("lambda")), P(s.at("a")), P(s.at("b")), P(s.at("from")), P(s.at("to"))});
    return verify_chain(steps, f, g);
  }
  if (type == "decomposition") {
    UniPoly p = parse_unipoly(c.at("p").get<std::string>(), field);
    return compose(p, P(c.at("core"))) == f;
  }
  if (type == "factorization") {
    NcPoly prod(Scalar(1));
    for (const auto& s : c.at("factors")) {
      NcPoly h = P(s);
      if (!h.is_homogeneous()) return false;
      prod = prod * h;
    }
    return prod == f;
  }
  if (type == "gcrd") {
    GcrdResult r{P(c.at("h")), P(c.at("q_p")), P(c.at("q_q")), P(c.at("s")), P(c.at("t"))};
    return r.verify(f, g);
  }
  if (type == "comaximality") {
    ComaxCertificate cc{f, g, P(c.at("u")), P(c.at("v")), c.at("side") == "right" ? Side::Right : Side::Left};
    return cc.verify();
  }
  detail = "unknown certificate type " + type;
  return false;
}

int verify_report(const json& rep, const RunConfig& cfg, std::ostream& out) {
  json res;
  res["command"] = "verify";
  res["checked"] = rep.value("command", "");
  int checked = 0;
  bool ok = true;
  if (rep.contains("certificate") && !rep.at("certificate").is_null()) {
    std::string detail;
    bool good = verify_certificate(rep, rep.at("certificate"), detail);
    res["certificate"] = {{"type", detail}, {"valid", good}};
    ok = ok && good;
    ++checked;
  }
  if (rep.contains("witness") && !rep.at("witness").is_null()) {
    FieldPtr field = parse_field(rep.at("field").get<std::string>());
    VarNames vars = rep.at("vars").get<VarNames>();
    RefutationWitness w = witness_from_json(rep.at("witness"));
    bool good = w.verify(parse(rep.at("f").get<std::string>(), vars, field),
                         parse(rep.at("g").get<std::string>(), vars, field), rep.value("tolerance", cfg.tol));
    res["witness"] = {{"kind", to_string(w.kind)}, {"valid", good}};
    ok = ok && good;
    ++checked;
  }
  if (rep.contains("pencil_witness") && !rep.at("pencil_witness").is_null()) {
    MatrixTuple a = tuple_from_json(rep.at("a")), b = tuple_from_json(rep.at("b"));
    MatrixTuple x = tuple_from_json(rep.at("pencil_witness"));
    std::vector<Matrix> ca{Matrix::identity(a.size)}, cb{Matrix::identity(b.size)};
    ca.insert(ca.end(), a.mats.begin(), a.mats.end());
    cb.insert(cb.end(), b.mats.begin(), b.mats.end());
    bool good = rank(pencil_eval(LinearPencil(true, ca), x)) != rank(pencil_eval(LinearPencil(true, cb), x));
    res["pencil_witness"] = {{"valid", good}};
    ok = ok && good;
    ++checked;
  }
  if (rep.contains("word_witness") && !rep.at("word_witness").is_null()) {
    MatrixTuple a = tuple_from_json(rep.at("a")), b = tuple_from_json(rep.at("b"));
    NcPoly w = parse(rep.at("word_witness").get<std::string>(), default_varnames(a.mats.size()));
    Matrix x = evaluate(w, a), y = evaluate(w, b);
    bool good = !(x.trace() == y.trace()) || rank(x) != rank(y);
    res["word_witness"] = {{"valid", good}};
    ok = ok && good;
    ++checked;
  }
  if (rep.contains("exact_refutation")) {
    // Linear-algebra refutations are re-derived rather than expanded.
    MatrixTuple a = tuple_from_json(rep.at("a")), b = tuple_from_json(rep.at("b"));
    bool good = joint_similarity(a, b).verdict == Similarity::NotSimilar;
    res["exact_refutation"] = {{"recomputed", good}};
    ok = ok && good;
    ++checked;
  }
  int code = checked == 0 ? kUndecided : ok ? kCertified : kRefuted;
  return emit(cfg, res, code, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalences of noncommutative polynomials: certificates and matrix witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "Scalar field, e.g. Q, Q(i), Q(sqrt5)(xi: xi^2=29+13*sqrt5)");
  app.add_option("--vars", cfg.vars, "Comma-separated variable names (default x,y,z or x1..xn)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--min-size", cfg.min_size, "Smallest sampled matrix size")->check(CLI::PositiveNumber);
  app.add_option("--max-size", cfg.max_size, "Largest sampled matrix size")->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Samples per size")->check(CLI::PositiveNumber);
  app.add_option("--max-deg", cfg.max_deg, "Degree budget for intertwiner and GCRD searches")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Relative tolerance for norm comparisons")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Emit the report as JSON");
  app.add_flag("--high-precision", cfg.high_precision, "256-bit floating evaluation for norms");

  std::vector<std::string> polys;
  std::string at, side = "right", pencil_arg, tuple_arg, a_arg, b_arg, report_arg;
  std::function<int()> action;

  auto two = [&](const char* name, const char* help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("f", polys, "Polynomials")->required()->expected(2);
    return sc;
  };

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at a matrix tuple");
  eval_cmd->add_option("f", polys, "Polynomial")->required()->expected(1);
  eval_cmd->add_option("--at", at, "Tuple as JSON text or file")->required();
  eval_cmd->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      MatrixTuple x = tuple_from_json(load_json(at));
      json rep = header("eval", in);
      rep["f"] = print(in.polys[0], in.vars);
      rep["tuple"] = to_json(x);
      rep["value"] = to_json(evaluate(in.polys[0], x));
      return emit(cfg, rep, kCertified, out);
    };
  });

  two("intertwiner", "Minimal nonzero a with f a = a g")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      json rep = header("intertwiner", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      auto a = minimal_intertwiner(f, g, cfg.max_deg);
      if (!a) {
        rep["certificate"] = nullptr;
        rep["reason"] = "no intertwiner of degree <= " + std::to_string(cfg.max_deg);
        return emit(cfg, rep, kUndecided, out);
      }
      rep["certificate"] = {{"type", "intertwiner"}, {"a", print(*a, in.vars)}, {"degree", a->degree().value()}};
      return emit(cfg, rep, kCertified, out);
    };
  });

  two("isospectral", "Decide isospectrality")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      auto v = is_isospectral(f, g, cfg.equiv());
      json rep = header("isospectral", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      rep["isospectral"] = v.isospectral;
      rep["reason"] = v.reason;
      rep["certificate"] = v.intertwiner ? json{{"type", "intertwiner"}, {"a", print(*v.intertwiner, in.vars)}}
                                         : json(nullptr);
      rep["witness"] = witness_or_null(v.witness);
      int code = !v.isospectral ? kRefuted : v.intertwiner ? kCertified : kUndecided;
      return emit(cfg, rep, code, out);
    };
  });

  two("chain", "Chain of elementary intertwinings from f to g")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      auto ch = intertwining_chain(f, g, cfg.equiv());
      json rep = header("chain", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      if (ch.steps) {
        rep["certificate"] = {{"type", "chain"}, {"steps", chain_json(*ch.steps, in.vars)}};
        return emit(cfg, rep, kCertified, out);
      }
      rep["certificate"] = nullptr;
      rep["reason"] = ch.diagnostic;
      auto w = charpoly_refuter(f, g, cfg.refuter());
      rep["witness"] = witness_or_null(w);
      return emit(cfg, rep, w ? kRefuted : kUndecided, out);
    };
  });

  two("stable-assoc", "Decide stable association (rank-equivalence)")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      auto v = stable_association(f, g, cfg.equiv());
      json rep = header("stable-assoc", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      rep["verdict"] = to_string(v.verdict);
      rep["reason"] = v.reason;
      if (v.verdict == Verdict::Associated) {
        rep["certificate"] = {{"type", "stable-association"},
                              {"a", print(v.a, in.vars)},
                              {"b", print(v.b, in.vars)},
                              {"right", to_json(*v.right, in.vars)},
                              {"left", to_json(*v.left, in.vars)}};
      } else {
        rep["certificate"] = nullptr;
      }
      rep["witness"] = witness_or_null(v.refutation);
      int code = v.verdict == Verdict::Associated ? kCertified
                 : v.verdict == Verdict::NotAssociated ? kRefuted
                                                        : kUndecided;
      return emit(cfg, rep, code, out);
    };
  });

  two("similar", "Pointwise similarity, which coincides with equality")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      json rep = header("similar", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      bool same = pointwise_similar(f, g);
      rep["similar"] = same;
      if (same) {
        rep["certificate"] = {{"type", "equality"}};
        return emit(cfg, rep, kCertified, out);
      }
      rep["certificate"] = nullptr;
      rep["witness"] = witness_or_null(similarity_refuter(f, g, cfg.refuter()));
      return emit(cfg, rep, kRefuted, out);
    };
  });

  two("norm-equiv", "Pointwise norm equality, i.e. g = zeta f with |zeta| = 1")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      RefuterConfig rc = cfg.refuter();
      auto v = norm_equivalent(f, g, &rc);
      json rep = header("norm-equiv", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      rep["tolerance"] = cfg.tol;
      rep["equivalent"] = v.equivalent;
      if (v.equivalent) {
        rep["certificate"] = {{"type", "unimodular-scaling"}, {"zeta", v.zeta->to_string()}, {"cyclic_check", v.cyclic_check}};
        return emit(cfg, rep, kCertified, out);
      }
      rep["certificate"] = nullptr;
      rep["witness"] = witness_or_null(v.witness);
      return emit(cfg, rep, kRefuted, out);
    };
  });

  auto* dec = app.add_subcommand("decompose", "Write f = p(core) with a non-composite core");
  dec->add_option("f", polys, "Polynomial")->required()->expected(1);
  dec->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      auto d = decompose(in.polys[0]);
      json rep = header("decompose", in);
      rep["f"] = print(in.polys[0], in.vars);
      rep["certificate"] = {{"type", "decomposition"}, {"p", d.p.to_string()}, {"core", print(d.core, in.vars)}};
      return emit(cfg, rep, kCertified, out);
    };
  });

  auto* fh = app.add_subcommand("factor-homog", "Irreducible factors of a homogeneous polynomial");
  fh->add_option("f", polys, "Polynomial")->required()->expected(1);
  fh->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      json rep = header("factor-homog", in);
      rep["f"] = print(in.polys[0], in.vars);
      json fs = json::array();
      for (const auto& h : factor_homogeneous(in.polys[0])) fs.push_back(print(h, in.vars));
      rep["certificate"] = {{"type", "factorization"}, {"factors", fs}};
      return emit(cfg, rep, kCertified, out);
    };
  });

  two("gcrd", "Certified greatest common right divisor")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &p = in.polys[0], &q = in.polys[1];
      json rep = header("gcrd", in);
      rep["f"] = print(p, in.vars);
      rep["g"] = print(q, in.vars);
      auto bound = app.get_subcommand("gcrd")->count("--bound") ? std::optional<std::size_t>(cfg.max_deg) : std::nullopt;
      auto r = gcrd_bounded(p, q, bound);
      if (!r) {
        rep["certificate"] = nullptr;
        rep["reason"] = "no verified common right divisor within the degree budget";
        return emit(cfg, rep, kUndecided, out);
      }
      rep["certificate"] = {{"type", "gcrd"},   {"h", print(r->h, in.vars)}, {"q_p", print(r->q_p, in.vars)},
                            {"q_q", print(r->q_q, in.vars)}, {"s", print(r->s, in.vars)}, {"t", print(r->t, in.vars)}};
      return emit(cfg, rep, kCertified, out);
    };
  });
  app.get_subcommand("gcrd")->add_flag("--bound", "Use --max-deg as the combiner degree bound");

  auto* cx = two("comax", "Comaximality certificate f u + g v = 1 (right) or u f + v g = 1 (left)");
  cx->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  cx->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &f = in.polys[0], &g = in.polys[1];
      json rep = header("comax", in);
      rep["f"] = print(f, in.vars);
      rep["g"] = print(g, in.vars);
      auto c = comaximality_certificate(f, g, side == "left" ? Side::Left : Side::Right);
      if (!c) {
        rep["certificate"] = nullptr;
        rep["reason"] = "no solution within the complete degree bounds: not comaximal";
        return emit(cfg, rep, kRefuted, out);
      }
      json j = to_json(*c, in.vars);
      j["type"] = "comaximality";
      rep["certificate"] = j;
      return emit(cfg, rep, kCertified, out);
    };
  });

  auto* ps = app.add_subcommand("pencil-sim", "Joint similarity of two matrix tuples");
  ps->add_option("a", a_arg, "Tuple A (JSON text or file)")->required();
  ps->add_option("b", b_arg, "Tuple B (JSON text or file)")->required();
  ps->callback([&] {
    action = [&] {
      MatrixTuple a = tuple_from_json(load_json(a_arg)), b = tuple_from_json(load_json(b_arg));
      SimilarityOptions so;
      so.seed = cfg.seed;
      so.samples = cfg.samples;
      so.max_size = cfg.max_size;
      auto r = joint_similarity(a, b, so);
      json rep;
      rep["command"] = "pencil-sim";
      rep["field"] = common_field(a.field(), b.field())->declaration();
      rep["vars"] = json::array();
      rep["a"] = to_json(a);
      rep["b"] = to_json(b);
      rep["verdict"] = to_string(r.verdict);
      rep["reason"] = r.reason;
      rep["certificate"] = r.p ? json{{"type", "similarity"}, {"P", to_json(*r.p)}} : json(nullptr);
      rep["pencil_witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
      rep["word_witness"] = r.word ? json(print_word(*r.word, default_varnames(a.mats.size()))) : json(nullptr);
      if (r.verdict == Similarity::NotSimilar && !r.witness && !r.word) rep["exact_refutation"] = r.reason;
      int code = r.verdict == Similarity::Similar ? kCertified : r.verdict == Similarity::NotSimilar ? kRefuted : kUndecided;
      return emit(cfg, rep, code, out);
    };
  });

  auto* pp = app.add_subcommand("pad-pencil", "Padded pencil and its verified inner rank");
  pp->add_option("--pencil", pencil_arg, "Homogeneous pencil (JSON text or file)")->required();
  pp->add_option("--tuple", tuple_arg, "Rectangular tuple (JSON text or file)")->required();
  pp->callback([&] {
    action = [&] {
      LinearPencil lambda = pencil_from_json(load_json(pencil_arg));
      json tj = load_json(tuple_arg);
      auto t = matrices_from_json(tj);
      auto res = pad_pencil(lambda, t, cfg.samples, cfg.seed);
      json rep;
      rep["command"] = "pad-pencil";
      rep["field"] = "Q";
      rep["vars"] = json::array();
      rep["pencil"] = to_json(lambda);
      rep["tuple"] = tj;
      rep["p_tilde"] = res.p_tilde;
      rep["padded_size"] = res.pencil.size();
      rep["variables"] = res.pencil.arity();
      rep["claimed_rank"] = res.claimed_rank;
      rep["verified_rank"] = res.verified_rank;
      bool ok = res.verified_rank == res.claimed_rank && res.rank_point;
      rep["certificate"] = ok ? json{{"type", "padded-rank"}, {"claimed_rank", res.claimed_rank}, {"point", to_json(*res.rank_point)}}
                              : json(nullptr);
      return emit(cfg, rep, ok ? kCertified : kUndecided, out);
    };
  });

  two("nc-witness", "X and k with rank (ab)(X)^k != rank (ba)(X)^k")->callback([&] {
    action = [&] {
      Inputs in = parse_inputs(cfg, polys);
      const NcPoly &a = in.polys[0], &b = in.polys[1];
      json rep = header("nc-witness", in);
      rep["a"] = print(a, in.vars);
      rep["b"] = print(b, in.vars);
      rep["f"] = print(a * b, in.vars);
      rep["g"] = print(b * a, in.vars);
      if (a * b == b * a) {
        rep["certificate"] = {{"type", "commuting"}};
        return emit(cfg, rep, kCertified, out);
      }
      auto w = noncommutativity_witness(a, b, cfg.refuter());
      rep["certificate"] = nullptr;
      rep["witness"] = witness_or_null(w);
      return emit(cfg, rep, w ? kRefuted : kUndecided, out);
    };
  });

  app.add_subcommand("verify-paper", "Run the golden corpus")->callback([&] {
    action = [&] {
      json rep;
      rep["command"] = "verify-paper";
      rep["items"] = json::array();
      bool all = true;
      for (const auto& it : corpus::verify_paper(cfg.seed)) {
        rep["items"].push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
        all = all && it.pass;
      }
      rep["passed"] = all;
      return emit(cfg, rep, all ? kCertified : kRefuted, out);
    };
  });

  auto* vf = app.add_subcommand("verify", "Re-check the certificate or witness of a JSON report");
  vf->add_option("report", report_arg, "Report (JSON text or file)")->required();
  vf->callback([&] { action = [&] { return verify_report(load_json(report_arg), cfg, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kCertified;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.message() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace ncequiv::cli
