#include "dmsvp/cli.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmsvp/errors.hpp"
#include "dmsvp/exact_linalg.hpp"
#include "dmsvp/instance_gen.hpp"
#include "dmsvp/matrix_io.hpp"
#include "dmsvp/polyhedra.hpp"
#include "dmsvp/svp_oracle.hpp"
#include "dmsvp/svp_threshold.hpp"
#include "dmsvp/sweeps.hpp"

namespace dmsvp::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kOutcomeSchema = "dmsvp.svp_outcome.v1";
constexpr const char* kInstanceSchema = "dmsvp.instance.v1";
constexpr const char* kReportSchema = "dmsvp.report.v1";

struct Common {
  bool json = false;
  bool verbose = false;
  unsigned threads = 1;
  std::string stamp;
  std::optional<std::uint64_t> budget;

  EnumerationBudget or_default(EnumerationBudget fallback) const {
    return budget ? EnumerationBudget{*budget} : fallback;
  }
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

Json ints(const IntVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).str());
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) rows.push_back(ints(m.row(i).transpose()));
  return rows;
}

Json indices(const IndexList& v) {
  Json a = Json::array();
  for (Index x : v) a.push_back(x);
  return a;
}

std::string index_line(const IndexList& v) {
  std::string s;
  for (Index x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Json header(const char* schema, const char* kind, const Common& c) {
  Json j;
  j["schema"] = schema;
  j["kind"] = kind;
  if (!c.stamp.empty()) j["stamp"] = c.stamp;
  return j;
}

Integer parse_big(const std::string& text, const char* name) {
  const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() || !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                                           [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError(std::string("--") + name + ": expected an integer, got '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

MatrixDocument load(const std::string& path, Io& io) {
  return path == "-" ? parse_document(io.in) : read_document_file(path);
}

IntMatrix load_matrix(const std::string& path, Io& io) {
  MatrixDocument doc = load(path, io);
  if (doc.b || doc.c) throw ParseError("expected a bare matrix, found b:/c: lines");
  return std::move(doc.a);
}

void emit(Io& io, const Json& j) { io.out << j.dump() << "\n"; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

// svp ---------------------------------------------------------------------

int svp_solve(Io& io, const Common& c, const std::string& delta_text, const std::string& file) {
  const IntMatrix a = load_matrix(file, io);
  const Integer delta = parse_big(delta_text, "delta");
  DispatchOptions opts;
  opts.box_budget = c.or_default(EnumerationBudget::box());

  if (c.verbose) {
    const Integer threshold = g_threshold(delta) + 1;
    const Index r = rank(a);
    io.err << "rank " << r << ", threshold n >= " << threshold << ", path "
           << (Integer(r) >= threshold ? "threshold" : "oracle") << "\n";
    if (r == a.cols() && Integer(r) >= threshold) {
      const ThresholdRun run = solve_threshold_traced(a, delta);
      for (std::size_t k = 0; k < run.states.size(); ++k) {
        const ThresholdState& s = run.states[k];
        io.err << "l=" << s.iteration << " |det B|=" << s.det_abs << " rows=" << index_line(s.base_rows) << " -> "
               << to_string(run.transitions[k]) << "\n";
      }
    }
  }

  const DispatchOutcome outcome = solve_svp(a, delta, opts);
  if (const auto* sv = std::get_if<ShortVector>(&outcome)) {
    if (c.json) {
      Json j = header(kOutcomeSchema, "short_vector", c);
      j["z"] = ints(sv->z);
      j["y"] = ints(sv->y);
      j["norm"] = "1";
      emit(io, j);
    } else {
      io.out << "short_vector\nz: " << format_row(sv->z) << "\ny: " << format_row(sv->y) << "\nnorm: " << sv->norm
             << "\n";
    }
  } else if (const auto* cert = std::get_if<Certificate>(&outcome)) {
    if (c.json) {
      Json j = header(kOutcomeSchema, "certificate", c);
      j["rows"] = indices(cert->rows);
      j["det"] = cert->det_value.str();
      emit(io, j);
    } else {
      io.out << "certificate\nrows: " << index_line(cert->rows) << "\ndet: " << cert->det_value << "\n";
    }
  } else {
    const auto& r = std::get<OracleResult>(outcome);
    if (c.json) {
      Json j = header(kOutcomeSchema, "oracle", c);
      j["z"] = ints(r.z);
      j["y"] = ints(r.y);
      j["norm"] = r.norm.str();
      emit(io, j);
    } else {
      io.out << "oracle\nz: " << format_row(r.z) << "\ny: " << format_row(r.y) << "\nnorm: " << r.norm << "\n";
    }
  }
  return kOk;
}

int svp_oracle(Io& io, const Common& c, const std::string& bound_text, const std::string& file) {
  const IntMatrix a = load_matrix(file, io);
  const Integer k = bound_text.empty() ? enum_bound(a) : parse_big(bound_text, "bound");
  const OracleResult r = brute_force_svp(a, k, c.or_default(EnumerationBudget::box()));
  if (c.json) {
    Json j = header(kOutcomeSchema, "oracle", c);
    j["bound"] = k.str();
    j["z"] = ints(r.z);
    j["y"] = ints(r.y);
    j["norm"] = r.norm.str();
    emit(io, j);
  } else {
    io.out << "oracle\nbound: " << k << "\nz: " << format_row(r.z) << "\ny: " << format_row(r.y)
           << "\nnorm: " << r.norm << "\n";
  }
  return kOk;
}

int svp_atleast2(Io& io, const Common& c, const std::string& file) {
  const IntMatrix a = load_matrix(file, io);
  const AtLeastTwoResult r = shortest_is_at_least_2(a, c.or_default(EnumerationBudget::preimages()));
  if (c.json) {
    Json j = header(kOutcomeSchema, "at_least_2", c);
    j["at_least_2"] = r.at_least_two;
    if (r.witness) {
      j["z"] = ints(*r.witness);
      j["y"] = ints(a * *r.witness);
    }
    emit(io, j);
  } else {
    io.out << "at_least_2: " << bool_text(r.at_least_two) << "\n";
    if (r.witness) io.out << "z: " << format_row(*r.witness) << "\ny: " << format_row(a * *r.witness) << "\n";
  }
  return kOk;
}

// gen ---------------------------------------------------------------------

int emit_instance(Io& io, const Common& c, const char* construction, const Integer& delta,
                  std::optional<std::uint64_t> seed, const MatrixDocument& doc) {
  if (c.json) {
    Json j = header(kInstanceSchema, "instance", c);
    j["construction"] = construction;
    j["delta"] = delta.str();
    j["seed"] = seed ? Json(std::to_string(*seed)) : Json(nullptr);
    j["rows"] = doc.a.rows();
    j["cols"] = doc.a.cols();
    j["matrix"] = matrix_json(doc.a);
    if (doc.b) j["b"] = ints(*doc.b);
    emit(io, j);
  } else {
    io.out << format_document(doc);
  }
  return kOk;
}

// check -------------------------------------------------------------------

int check_delta(Io& io, const Common& c, const std::string& delta_text, bool total, const std::string& file) {
  const IntMatrix a = load_matrix(file, io);
  const Integer delta = parse_big(delta_text, "delta");
  const EnumerationBudget budget = c.or_default(EnumerationBudget::minors());
  const SubdeterminantWitness w = max_abs_full_rank_subdet(a, budget);
  std::optional<bool> totally;
  if (total) totally = is_totally_delta_modular(a, delta, budget);
  if (c.json) {
    Json j = header(kReportSchema, "check_delta", c);
    j["delta"] = delta.str();
    j["max_abs_full_rank_subdet"] = w.value.str();
    j["rows"] = indices(w.rows);
    j["delta_modular"] = (w.value == delta);
    j["at_most_delta"] = (w.value <= delta);
    if (totally) j["totally_delta_modular"] = *totally;
    emit(io, j);
  } else {
    io.out << "max_abs_full_rank_subdet: " << w.value << "\nrows: " << index_line(w.rows)
           << "\ndelta_modular: " << bool_text(w.value == delta) << "\nat_most_delta: " << bool_text(w.value <= delta)
           << "\n";
    if (totally) io.out << "totally_delta_modular: " << bool_text(*totally) << "\n";
  }
  return kOk;
}

int check_sweep(Io& io, const Common& c, const char* name, const SweepReport& r, std::uint64_t seed) {
  if (c.json) {
    Json j = header(kReportSchema, name, c);
    j["seed"] = std::to_string(seed);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    if (!r.passed()) j["first_failure"] = r.first_failure;
    emit(io, j);
  } else {
    io.out << name << ": " << r.trials << " trials, " << r.failures << " failures, "
           << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) io.out << r.first_failure;
  }
  return r.passed() ? kOk : kFailed;
}

// verify ------------------------------------------------------------------

int verify_theorem3_cmd(Io& io, const Common& c, const std::string& delta_text, const std::string& file) {
  MatrixDocument doc = load(file, io);
  if (!doc.b) throw ParseError("verify theorem3 needs a 'b:' line");
  const Integer delta = parse_big(delta_text, "delta");
  const PolyhedronH p{doc.a, *doc.b};
  const Theorem3Report r = verify_theorem3(p, delta, c.or_default(EnumerationBudget::minors()),
                                           c.or_default(EnumerationBudget::box()));
  if (c.json) {
    Json j = header(kReportSchema, "theorem3", c);
    j["delta"] = r.delta.str();
    j["bound"] = r.bound.str();
    j["max_abs_full_rank_subdet"] = r.max_subdet.str();
    Json entries = Json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"vertex", ints(e.vertex)}, {"face_dimension", e.face_dimension}, {"passed", e.passed}});
    j["hull_vertices"] = entries;
    j["passed"] = r.passed;
    emit(io, j);
  } else {
    io.out << "bound g(delta) = " << r.bound << ", max |subdet| = " << r.max_subdet << "\n";
    for (const auto& e : r.entries)
      io.out << "vertex " << format_row(e.vertex) << ": face dimension " << e.face_dimension << " "
             << (e.passed ? "PASS" : "FAIL") << "\n";
    io.out << "theorem3: " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? kOk : kFailed;
}

int verify_theorem4_cmd(Io& io, const Common& c, const std::string& delta_text, const std::vector<std::string>& box_text,
                        const std::string& file) {
  MatrixDocument doc = load(file, io);
  if (!doc.b || !doc.c) throw ParseError("verify theorem4 needs 'b:' and 'c:' lines");
  const Integer delta = parse_big(delta_text, "delta");
  const StandardFormILP ilp{doc.a, *doc.b, *doc.c};
  ilp.validate();

  IntVector box;
  std::vector<std::string> derivation;
  if (box_text.empty()) {
    BoxDerivation d = derive_box(ilp.a, ilp.b);
    box = d.box;
    derivation = std::move(d.log);
  } else {
    if (static_cast<Index>(box_text.size()) != ilp.a.cols())
      throw ParseError("--box needs " + std::to_string(ilp.a.cols()) + " entries");
    box.resize(ilp.a.cols());
    for (Index j = 0; j < box.size(); ++j) box(j) = parse_big(box_text[static_cast<std::size_t>(j)], "box");
  }
  const Theorem4Report r = verify_theorem4(ilp, delta, box, c.or_default(EnumerationBudget::box()));
  if (c.json) {
    Json j = header(kReportSchema, "theorem4", c);
    j["delta"] = r.delta.str();
    j["bound"] = r.bound.str();
    j["box"] = ints(box);
    j["box_derivation"] = derivation;
    j["optimizers"] = r.optimizer_count;
    j["min_support"] = r.min_support ? Json(*r.min_support) : Json(nullptr);
    j["sparsest"] = r.sparsest ? ints(*r.sparsest) : Json(nullptr);
    j["passed"] = r.passed;
    emit(io, j);
  } else {
    for (const auto& line : derivation) io.out << "box: " << line << "\n";
    io.out << "box: " << format_row(box) << "\noptimizers: " << r.optimizer_count << "\n";
    if (r.min_support)
      io.out << "min support: " << *r.min_support << " (bound m + g(delta) = " << r.bound << ")\nsparsest: "
             << format_row(*r.sparsest) << "\n";
    else
      io.out << "no feasible point in the box\n";
    io.out << "theorem4: " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? kOk : kFailed;
}

int verify_prop1_cmd(Io& io, const Common& c, const std::string& delta_text) {
  const Integer delta = parse_big(delta_text, "delta");
  const Prop1Report r =
      verify_prop1(delta, c.or_default(EnumerationBudget::minors()), c.or_default(EnumerationBudget::box()));
  if (c.json) {
    Json j = header(kReportSchema, "prop1", c);
    j["delta"] = r.delta.str();
    j["matrix"] = matrix_json(r.a);
    j["b"] = ints(r.b);
    j["box"] = ints(r.box.box);
    j["box_derivation"] = r.box.log;
    Json feasible = Json::array();
    for (const auto& x : r.feasible) feasible.push_back(ints(x));
    j["feasible"] = feasible;
    j["unique_all_ones"] = r.unique_all_ones;
    j["support"] = r.support;
    j["expected_support"] = r.expected_support;
    j["totally_delta_modular"] = r.totally_delta_modular;
    j["passed"] = r.passed;
    emit(io, j);
  } else {
    io.out << format_document({r.a, r.b, std::nullopt});
    for (const auto& line : r.box.log) io.out << "box: " << line << "\n";
    io.out << "box: " << format_row(r.box.box) << "\n";
    for (const auto& x : r.feasible) io.out << "feasible: " << format_row(x) << "\n";
    io.out << "unique_all_ones: " << bool_text(r.unique_all_ones) << "\nsupport: " << r.support
           << " (expected m + delta - 1 = " << r.expected_support << ")\ntotally_delta_modular: "
           << bool_text(r.totally_delta_modular) << "\nprop1: " << (r.passed ? "PASS" : "FAIL") << "\n";
  }
  return r.passed ? kOk : kFailed;
}

// matrix ------------------------------------------------------------------

int matrix_cmd(Io& io, const Common& c, const std::string& what, const std::string& file) {
  const IntMatrix a = load_matrix(file, io);
  if (what == "det") {
    const Integer d = det(a);
    if (c.json) {
      Json j = header(kReportSchema, "det", c);
      j["det"] = d.str();
      emit(io, j);
    } else {
      io.out << d << "\n";
    }
  } else if (what == "rank") {
    const Index r = rank(a);
    if (c.json) {
      Json j = header(kReportSchema, "rank", c);
      j["rank"] = r;
      emit(io, j);
    } else {
      io.out << r << "\n";
    }
  } else {
    const HermiteForm hf = hnf(a);
    if (c.json) {
      Json j = header(kReportSchema, "hnf", c);
      j["h"] = matrix_json(hf.h);
      j["u"] = matrix_json(hf.u);
      j["rank"] = hf.rank;
      emit(io, j);
    } else {
      io.out << format_matrix(hf.h);
    }
  }
  return kOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kParse: return kUsage;
    case ErrorKind::kPrecondition: return kPrecondition;
    case ErrorKind::kBudget: return kBudget;
    case ErrorKind::kInvariant: return kFailed;
  }
  return kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  Common common;
  CLI::App app{"Shortest vectors and polyhedral checks for matrices with bounded subdeterminants", "dmsvp"};
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::function<int()>>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->add_flag("--json", common.json, "Emit JSON");
    sub->add_flag("-v,--verbose", common.verbose, "Log progress to stderr");
    sub->add_option("--threads", common.threads, "Worker threads (output is identical for every value)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--stamp", common.stamp, "Opaque label copied into JSON output");
    sub->add_option("--budget", common.budget, "Override the enumeration budget");
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  std::string delta, file, bound;
  std::string rows_text, cols_text;
  std::uint64_t seed = 0, trials = 0;
  bool total = false;
  std::vector<std::string> box;

  CLI::App* svp = group("svp", "Shortest vector in the infinity norm");
  {
    CLI::App* s = leaf(svp, "solve", "Threshold solver with oracle fallback");
    s->add_option("--delta", delta, "Claimed subdeterminant bound")->required();
    s->add_option("file", file, "Matrix file, '-' for stdin")->required();
    leaves.push_back({s, [&] { return svp_solve(io, common, delta, file); }});

    CLI::App* o = leaf(svp, "oracle", "Exhaustive box enumeration");
    o->add_option("--bound", bound, "Box half-width K (default: enum_bound)");
    o->add_option("file", file, "Matrix file, '-' for stdin")->required();
    leaves.push_back({o, [&] { return svp_oracle(io, common, bound, file); }});

    CLI::App* t = leaf(svp, "atleast2", "Decide whether every nonzero vector has norm >= 2");
    t->add_option("file", file, "Matrix file, '-' for stdin")->required();
    leaves.push_back({t, [&] { return svp_atleast2(io, common, file); }});
  }

  CLI::App* gen = group("gen", "Instance generators");
  {
    CLI::App* l = leaf(gen, "lower-bound", "Delta-modular matrix without norm-1 vectors");
    l->add_option("--delta", delta)->required();
    leaves.push_back({l, [&] {
                        const Integer d = parse_big(delta, "delta");
                        return emit_instance(io, common, "lower_bound", d, std::nullopt,
                                             {lower_bound_instance(d), std::nullopt, std::nullopt});
                      }});

    CLI::App* s = leaf(gen, "sparsity", "Standard-form system with a unique all-ones solution");
    s->add_option("--delta", delta)->required();
    leaves.push_back({s, [&] {
                        const Integer d = parse_big(delta, "delta");
                        const SparsityInstance inst = sparsity_instance(d);
                        return emit_instance(io, common, "sparsity", d, std::nullopt, {inst.a, inst.b, std::nullopt});
                      }});

    CLI::App* r = leaf(gen, "random", "Seeded random delta-modular matrix");
    r->add_option("--delta", delta)->required();
    r->add_option("--rows", rows_text)->required();
    r->add_option("--cols", cols_text)->required();
    r->add_option("--seed", seed)->required();
    leaves.push_back({r, [&] {
                        const Integer d = parse_big(delta, "delta");
                        const Integer rr = parse_big(rows_text, "rows"), cc = parse_big(cols_text, "cols");
                        if (rr < 1 || cc < 1 || rr > 100000 || cc > 100000)
                          throw DimensionError("--rows and --cols must be in [1, 100000]");
                        const IntMatrix a =
                            random_delta_modular(d, rr.convert_to<Index>(), cc.convert_to<Index>(), {seed});
                        return emit_instance(io, common, "random", d, seed, {a, std::nullopt, std::nullopt});
                      }});
  }

  CLI::App* check = group("check", "Subdeterminant checks and identity sweeps");
  {
    CLI::App* d = leaf(check, "delta", "Largest full-rank minor, optionally all minors");
    d->add_option("--delta", delta)->required();
    d->add_flag("--total", total, "Also check every square minor");
    d->add_option("file", file, "Matrix file, '-' for stdin")->required();
    leaves.push_back({d, [&] { return check_delta(io, common, delta, total, file); }});

    for (const char* name : {"lemma1", "lemma2"}) {
      CLI::App* l = leaf(check, name, std::string("Seeded sweep of the ") +
                                          (name[5] == '1' ? "determinant-ratio" : "kernel-lattice minor") +
                                          " identity");
      auto* seed_opt = l->add_option("--seed", seed);
      auto* trials_opt = l->add_option("--trials", trials);
      trials_opt->needs(seed_opt);
      const bool first = name[5] == '1';
      leaves.push_back({l, [&, first, trials_opt] {
                          const std::uint64_t n = trials_opt->count() ? trials : (first ? 1000 : 500);
                          return first ? check_sweep(io, common, "lemma1", lemma1_sweep(n, {seed}), seed)
                                       : check_sweep(io, common, "lemma2", lemma2_sweep(n, {seed}), seed);
                        }});
    }
  }

  CLI::App* verify = group("verify", "Polyhedral verifiers");
  {
    CLI::App* t3 = leaf(verify, "theorem3", "Face dimension of integer-hull vertices");
    t3->add_option("--delta", delta)->required();
    t3->add_option("file", file, "Matrix with 'b:' line, '-' for stdin")->required();
    leaves.push_back({t3, [&] { return verify_theorem3_cmd(io, common, delta, file); }});

    CLI::App* t4 = leaf(verify, "theorem4", "Support of optimal standard-form solutions");
    t4->add_option("--delta", delta)->required();
    t4->add_option("--box", box, "Comma-separated per-variable upper bounds (default: derived from the rows)")
        ->delimiter(',')
        ->allow_extra_args(false);
    t4->add_option("file", file, "Matrix with 'b:' and 'c:' lines, '-' for stdin")->required();
    leaves.push_back({t4, [&] { return verify_theorem4_cmd(io, common, delta, box, file); }});

    CLI::App* p1 = leaf(verify, "prop1", "Sparsity instance: unique all-ones solution");
    p1->add_option("--delta", delta)->required();
    leaves.push_back({p1, [&] { return verify_prop1_cmd(io, common, delta); }});
  }

  CLI::App* matrix = group("matrix", "Exact matrix utilities");
  for (const char* what : {"det", "hnf", "rank"}) {
    CLI::App* m = leaf(matrix, what, std::string("Print the ") + what);
    m->add_option("file", file, "Matrix file, '-' for stdin")->required();
    const std::string w = what;
    leaves.push_back({m, [&, w] { return matrix_cmd(io, common, w, file); }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [sub, action] : leaves)
      if (sub->parsed()) return action();
    err << "error: no command\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace dmsvp::cli
