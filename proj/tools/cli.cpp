#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "qdef/defcomplex.hpp"
#include "qdef/errors.hpp"
#include "qdef/invariants.hpp"
#include "qdef/io.hpp"
#include "qdef/skeletal.hpp"
#include "qdef/tangles.hpp"
#include "qdef/tortile.hpp"

namespace qdef::cli {
namespace {

struct Globals {
  std::string field;
  std::optional<unsigned> order;
  bool machine = false;
};

using Rows = std::vector<std::vector<std::string>>;

// Left-aligned columns, two spaces apart; the last column is not padded.
void print_table(std::ostream& out, const Rows& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

void header(std::ostream& out, const Globals& g, const std::string& body) {
  out << (g.machine ? "" : "# ") << body << "\n";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

// Space-separated coefficients for machine records.
std::string flat(const TruncatedScalar& v) {
  std::vector<std::string> parts;
  for (const auto& c : v.coeffs()) parts.push_back(c.to_string());
  return join(parts, " ");
}

unsigned parse_count(std::string_view text, const std::string& what) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size() || text.empty())
    throw ParseError(what + ": expected a non-negative integer, got '" + std::string(text) + "'");
  return v;
}

std::optional<Field> field_flag(const Globals& g) {
  if (g.field.empty()) return std::nullopt;
  return Field::parse(g.field);
}

void check_field(const Globals& g, const Field& found, const std::string& source) {
  auto f = field_flag(g);
  if (f && !(*f == found))
    throw FieldMismatchError(source + ": field is " + found.to_string() + " but --field asks for " + f->to_string());
}

TortileObjectData load_data(const std::string& arg, const Globals& g) {
  TortileObjectData t;
  if (arg.rfind("kauffman:", 0) == 0) {
    t = kauffman_data(parse_count(arg.substr(9), "--data"), field_flag(g).value_or(Field::rationals()));
  } else {
    t = parse_data(read_file(arg), arg);
    check_field(g, t.ring.field, arg);
  }
  if (g.order && *g.order != t.order()) {
    if (*g.order > t.order())
      throw OrderError("--order " + std::to_string(*g.order) + " exceeds the data order " + std::to_string(t.order()));
    t = reduce_data(t, *g.order);
  }
  return t;
}

struct Named {
  std::string id;
  MorseDiagram diagram;
};

// Line of the pos-th slice (1-based) in Morse text; past the end maps to the
// last slice line.
int slice_line(std::string_view text, std::size_t pos) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0, last = 1;
  std::size_t seen = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "source" || head == "target") continue;
    last = n;
    if (++seen == pos) return n;
  }
  return last;
}

std::vector<Named> load_diagrams(const std::vector<std::string>& braids, const std::vector<std::string>& morses) {
  std::vector<Named> out;
  for (std::size_t i = 0; i < braids.size(); ++i) {
    const std::string& b = braids[i];
    if (std::filesystem::is_regular_file(b)) {
      out.push_back({b, trace_closure(parse_braid(read_file(b), b))});
    } else if (b.find('=') != std::string::npos) {
      out.push_back({"braid" + std::to_string(i + 1), trace_closure(parse_braid(b, "--braid"))});
    } else {
      read_file(b);  // reports the unreadable path
    }
  }
  for (const auto& path : morses) {
    std::string text = read_file(path);
    MorseDiagram d = parse_morse(text, path);
    try {
      validate(d);
    } catch (const ValidationError& e) {
      throw ParseError(path, slice_line(text, e.position()), e.what());
    }
    out.push_back({path, std::move(d)});
  }
  if (out.empty()) throw ParseError("no diagram given (use --braid or --morse)");
  return out;
}

void require_closed(const Named& n) {
  if (!n.diagram.is_closed()) throw BoundaryError(n.id + ": diagram has free boundary");
}

std::shared_ptr<SkeletalPresentation> load_presentation(const std::string& arg, const Globals& g) {
  if (arg.rfind("cyclic:", 0) == 0) {
    unsigned n = parse_count(arg.substr(7), "--presentation");
    if (n == 0) throw ParseError("--presentation: cyclic order must be positive");
    return std::make_shared<SkeletalPresentation>(
        SkeletalPresentation::cyclic(field_flag(g).value_or(Field::rationals()), n));
  }
  auto p = std::make_shared<SkeletalPresentation>(parse_presentation(read_file(arg), arg));
  check_field(g, p->field(), arg);
  return p;
}

std::string tuple_text(const std::vector<Obj>& t, const std::vector<std::string>& names) {
  std::vector<std::string> parts;
  for (Obj a : t) parts.push_back(a < names.size() ? names[a] : std::to_string(a));
  return "(" + join(parts, ", ") + ")";
}

void report(std::ostream& err, const std::string& where, const std::vector<Violation>& vs,
            const std::vector<std::string>& names) {
  for (const auto& v : vs)
    err << where << ": " << v.condition << " fails at " << tuple_text(v.tuple, names) << ": " << v.lhs.to_string()
        << " != " << v.rhs.to_string() << "\n";
}

struct FunctorArgs {
  std::string presentation, target, functor;
};

// Loads source, target and functor; returns nullptr after printing witnesses
// when a coherence condition fails.
FunctorPtr load_functor(const FunctorArgs& a, const Globals& g, std::ostream& err) {
  auto src = load_presentation(a.presentation, g);
  auto dst = a.target.empty() ? src : load_presentation(a.target, g);
  if (!(src->field() == dst->field()))
    throw FieldMismatchError("source is over " + src->field().to_string() + ", target over " + dst->field().to_string());
  auto vs = check_presentation(*src);
  report(err, a.presentation, vs, src->names());
  bool bad = !vs.empty();
  if (dst != src) {
    auto vt = check_presentation(*dst);
    report(err, a.target, vt, dst->names());
    bad = bad || !vt.empty();
  }
  if (bad) return nullptr;
  FunctorPtr f;
  if (a.functor.empty()) {
    if (dst != src) throw ParseError("--functor is required when --target differs from --presentation");
    f = std::make_shared<FunctorPresentation>(FunctorPresentation::identity(src));
  } else {
    f = std::make_shared<FunctorPresentation>(parse_functor(read_file(a.functor), src, dst, a.functor));
  }
  auto vf = check_functor_hexagon(*f);
  auto vu = check_functor_units(*f);
  vf.insert(vf.end(), vu.begin(), vu.end());
  report(err, a.functor.empty() ? "functor" : a.functor, vf, src->names());
  return vf.empty() ? f : nullptr;
}

// ---------------------------------------------------------------------------

struct DiagramArgs {
  std::string data;
  std::vector<std::string> braids, morses;

  void attach(CLI::App* sub) {
    sub->add_option("--data", data, "tortile data file or kauffman:<order>")->required();
    sub->add_option("--braid", braids, "braid word text or file (repeatable)");
    sub->add_option("--morse", morses, "Morse diagram file (repeatable)");
  }
};

int cmd_eval(const DiagramArgs& a, bool values_too, bool coeffs, bool normalize, const Globals& g,
             std::ostream& out) {
  TortileObjectData t = load_data(a.data, g);
  auto ds = load_diagrams(a.braids, a.morses);
  Evaluator ev(t);
  header(out, g, "field " + t.ring.to_string());
  Rows values{{"diagram", "value"}};
  if (normalize) values[0].push_back("normalized");
  Rows table{{"diagram", "k", "coefficient"}};
  for (const auto& n : ds) {
    require_closed(n);
    TruncatedScalar v = ev.evaluate_closed(n.diagram);
    std::optional<TruncatedScalar> nv;
    if (normalize) nv = normalized_value(n.diagram, ev);
    if (!values_too) {
    } else if (g.machine) {
      out << "value " << n.id << " " << flat(v) << "\n";
      if (nv) out << "normalized " << n.id << " " << flat(*nv) << "\n";
    } else {
      values.push_back({n.id, v.to_string()});
      if (nv) values.back().push_back(nv->to_string());
    }
    if (coeffs) {
      for (unsigned k = 0; k <= t.order(); ++k) {
        if (g.machine)
          out << "coeff " << n.id << " " << k << " " << v[k].to_string() << "\n";
        else
          table.push_back({n.id, std::to_string(k), v[k].to_string()});
      }
    }
  }
  if (!g.machine) {
    if (values_too) print_table(out, values);
    if (values_too && coeffs) out << "\n";
    if (coeffs) print_table(out, table);
  }
  return kExitOk;
}

int cmd_verify_type(const DiagramArgs& a, std::optional<unsigned> max_singular, const Globals& g, std::ostream& out,
                    std::ostream& err) {
  TortileObjectData t = load_data(a.data, g);
  auto ds = load_diagrams(a.braids, a.morses);
  AxiomReport rep = check_axioms(t);
  auto failed = [](const std::vector<AxiomResult>& rs) {
    std::vector<std::string> names;
    for (const auto& r : rs)
      if (!r.pass) names.push_back(r.name);
    return join(names, ", ");
  };
  if (!rep.structural_ok()) {
    err << "refusing: the data fails structural checks (" << failed(rep.structural) << ")\n";
    return kExitProperty;
  }
  if (!rep.infinitesimally_symmetric()) {
    err << "refusing: the data is not symmetric mod eps (" << failed(rep.symmetry)
        << "), so the type bound does not apply\n";
    return kExitProperty;
  }
  const unsigned bound = t.order() + 1;
  const unsigned limit = max_singular.value_or(bound);
  Evaluator ev(t);
  Evaluator::PrefixCache cache;
  header(out, g, "field " + t.ring.to_string() + " bound " + std::to_string(bound));
  Rows rows{{"diagram", "singular", "slices", "value", "status"}};
  std::size_t checked = 0, failures = 0, witnesses = 0;
  for (const auto& n : ds) {
    require_closed(n);
    const std::size_t base = singular_count(n.diagram);
    const auto pos = singularizable_positions(n.diagram);
    for (std::size_t extra = 0; extra <= pos.size() && base + extra <= limit; ++extra) {
      if (base + extra == 0) continue;
      // Lexicographic sweep of extra-element subsets of pos.
      std::vector<std::size_t> pick(extra);
      for (std::size_t i = 0; i < extra; ++i) pick[i] = i;
      while (true) {
        std::vector<std::size_t> chosen;
        for (std::size_t i : pick) chosen.push_back(pos[i]);
        MorseDiagram s = singularize(n.diagram, chosen);
        TruncatedScalar v = ev.evaluate_closed(s, &cache);
        const std::size_t count = base + extra;
        std::string status;
        if (count >= bound) {
          ++checked;
          status = v.is_zero() ? "pass" : "FAIL";
          if (!v.is_zero()) ++failures;
        } else {
          status = v.is_zero() ? "zero" : "nonzero (below bound)";
          if (!v.is_zero()) ++witnesses;
        }
        std::vector<std::string> slices;
        for (std::size_t i = 0; i < s.slices.size(); ++i)
          if (is_singular(s.slices[i].kind)) slices.push_back(std::to_string(i + 1));
        if (g.machine)
          out << "pattern " << n.id << " " << count << " " << join(slices, ",") << " "
              << (status == "nonzero (below bound)" ? "nonzero" : status) << " " << flat(v) << "\n";
        else
          rows.push_back({n.id, std::to_string(count), join(slices, ","), v.to_string(), status});
        // Next combination.
        std::size_t i = extra;
        while (i > 0 && pick[i - 1] == pos.size() - extra + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < extra; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::string summary = std::to_string(checked) + " patterns with at least " + std::to_string(bound) +
                        " singular points, " + std::to_string(failures) + " failing; " + std::to_string(witnesses) +
                        " nonzero below the bound";
  if (g.machine) {
    out << "summary " << checked << " " << failures << " " << witnesses << "\n";
  } else {
    print_table(out, rows);
    out << summary << "\n";
  }
  return failures ? kExitProperty : kExitOk;
}

int cmd_axioms(const std::string& data, const Globals& g, std::ostream& out) {
  TortileObjectData t = load_data(data, g);
  AxiomReport rep = check_axioms(t);
  header(out, g, "field " + t.ring.to_string());
  Rows rows{{"check", "kind", "result", "witness"}};
  auto add = [&](const std::vector<AxiomResult>& rs, const std::string& kind) {
    for (const auto& r : rs) {
      std::string w = r.counterexample ? "entry (" + std::to_string(r.counterexample->first) + ", " +
                                             std::to_string(r.counterexample->second) + ")"
                                       : "";
      if (g.machine) {
        // Names contain spaces; they go last.
        out << "axiom " << kind << " " << (r.pass ? "pass" : "fail") << " "
            << (r.counterexample ? std::to_string(r.counterexample->first) + " " +
                                       std::to_string(r.counterexample->second)
                                 : "- -")
            << " " << r.name << "\n";
      } else {
        rows.push_back({r.name, kind, r.pass ? "pass" : (kind == "structural" ? "FAIL" : "flagged"), w});
      }
    }
  };
  add(rep.structural, "structural");
  add(rep.symmetry, "symmetry");
  if (!g.machine) print_table(out, rows);
  return rep.structural_ok() ? kExitOk : kExitProperty;
}

int cmd_cohomology(const FunctorArgs& a, const std::vector<unsigned>& degrees, bool proper, const Globals& g,
                   std::ostream& out, std::ostream& err) {
  for (unsigned n : degrees)
    if (n < 1 || n > 4) throw UnsupportedModelError("unsupported degree " + std::to_string(n) + " (supported: 1 to 4)");
  FunctorPtr f = load_functor(a, g, err);
  if (!f) return kExitProperty;
  header(out, g, "field " + f->source().field().to_string() + (proper ? " proper" : ""));
  Rows rows{{"degree", "ker", "im", "H"}};
  for (unsigned n : degrees) {
    Cohomology c = cohomology(*f, n, proper);
    if (g.machine)
      out << "cohomology " << n << " " << c.kernel << " " << c.image << " " << c.dimension << "\n";
    else
      rows.push_back({std::to_string(n), std::to_string(c.kernel), std::to_string(c.image), std::to_string(c.dimension)});
  }
  if (!g.machine) print_table(out, rows);
  return kExitOk;
}

int cmd_extend(const FunctorArgs& a, const std::string& deformation, std::optional<unsigned> target_order,
               const std::string& output, const Globals& g, std::ostream& out, std::ostream& err) {
  if (!target_order) target_order = g.order;
  if (!target_order) throw ParseError("extend needs --target-order (or the global --order)");
  FunctorPtr f = load_functor(a, g, err);
  if (!f) return kExitProperty;
  DeformationSeries d = parse_deformation(read_file(deformation), f, deformation);
  DeformationCheck chk = check_deformation(d);
  const auto& names = f->source().names();
  if (chk.failing_triple) {
    err << deformation << ": not a deformation; the hexagon fails at " << tuple_text(*chk.failing_triple, names)
        << "\n";
    return kExitProperty;
  }
  if (chk.improper_term) {
    err << deformation << ": term " << *chk.improper_term << " is not proper\n";
    return kExitProperty;
  }
  auto result = extend_deformation(d, *target_order);
  if (auto* ob = std::get_if<ObstructionClass>(&result)) {
    header(out, g, "field " + f->source().field().to_string() + " order " + std::to_string(ob->order));
    if (g.machine) {
      out << "obstruction " << ob->order << " " << ob->kernel_rank << " " << ob->image_rank << "\n";
    } else {
      out << "obstructed: no extension to order " << ob->order << "\n";
      out << "ker delta_3 = " << ob->kernel_rank << ", im delta_2 = " << ob->image_rank << "\n";
      out << "representative:\n";
    }
    out << format_cochain(ob->representative);
    return kExitProperty;
  }
  const auto& series = std::get<DeformationSeries>(result);
  std::string text = format_deformation(series);
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!(file << text)) throw ParseError("cannot write '" + output + "'");
    header(out, g, "field " + f->source().field().to_string() + " order " + std::to_string(series.order()));
    out << "wrote " << output << "\n";
  }
  return kExitOk;
}

int cmd_braiding_roundtrip(const std::string& presentation, bool all, const Globals& g, std::ostream& out,
                           std::ostream& err) {
  auto p = load_presentation(presentation, g);
  std::vector<SkeletalPresentation> cands;
  if (all || !p->braided()) {
    cands = enumerate_braidings(*p);
  } else {
    auto vs = check_presentation(*p);
    if (!vs.empty()) {
      report(err, presentation, vs, p->names());
      return kExitProperty;
    }
    cands.push_back(*p);
  }
  header(out, g, "field " + p->field().to_string() + " braidings " + std::to_string(cands.size()));
  Rows rows{{"braiding", "sigma", "coherent", "roundtrip"}};
  bool ok = true;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    auto c = std::make_shared<const SkeletalPresentation>(cands[i]);
    auto m = std::make_shared<FunctorPresentation>(mult_functor(c));
    auto vs = check_functor_hexagon(*m);
    auto vu = check_functor_units(*m);
    bool coherent = vs.empty() && vu.empty();
    auto back = braiding_from_mult(*m);
    bool round = true;
    std::vector<std::string> sig;
    for (Obj x = 0; x < c->size(); ++x)
      for (Obj y = 0; y < c->size(); ++y) {
        sig.push_back(c->sigma(x, y).to_string());
        if (!(back[x * c->size() + y] == c->sigma(x, y))) round = false;
      }
    ok = ok && coherent && round;
    if (g.machine)
      out << "braiding " << i + 1 << " " << (coherent ? "ok" : "fail") << " " << (round ? "ok" : "fail") << " "
          << join(sig, " ") << "\n";
    else
      rows.push_back({std::to_string(i + 1), "[" + join(sig, ", ") + "]", coherent ? "yes" : "NO", round ? "yes" : "NO"});
  }
  if (!g.machine) print_table(out, rows);
  return ok ? kExitOk : kExitProperty;
}

int cmd_check_disjoint(const DiagramArgs& a, const Globals& g, std::ostream& out) {
  TortileObjectData t = load_data(a.data, g);
  auto ds = load_diagrams(a.braids, a.morses);
  if (ds.size() != 2) throw ParseError("check-disjoint needs exactly two diagrams, got " + std::to_string(ds.size()));
  require_closed(ds[0]);
  require_closed(ds[1]);
  Evaluator ev(t);
  DisjointUnionCheck c = check_disjoint_union(ds[0].diagram, ds[1].diagram, ev);
  header(out, g, "field " + t.ring.to_string());
  Rows rows{{"k", ds[0].id, ds[1].id, "union", "convolution", "ok"}};
  for (unsigned k = 0; k <= t.order(); ++k) {
    bool eq = c.value_union[k] == c.convolution[k];
    if (g.machine)
      out << "term " << k << " " << c.value_a[k].to_string() << " " << c.value_b[k].to_string() << " "
          << c.value_union[k].to_string() << " " << c.convolution[k].to_string() << " " << (eq ? "ok" : "fail") << "\n";
    else
      rows.push_back({std::to_string(k), c.value_a[k].to_string(), c.value_b[k].to_string(),
                      c.value_union[k].to_string(), c.convolution[k].to_string(), eq ? "yes" : "NO"});
  }
  if (g.machine) {
    out << "product " << (c.product_ok ? "ok" : "fail") << "\n";
  } else {
    print_table(out, rows);
    out << "value(a u b) = value(a) value(b): " << (c.product_ok ? "yes" : "NO") << "\n";
  }
  return c.ok() ? kExitOk : kExitProperty;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-type invariants from infinitesimal deformations of tortile data"};
  app.name("qdef");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Q or Fp:<p>");
  app.add_option("--order", g.order, "truncation order n");
  app.add_flag("--machine", g.machine, "line-oriented records instead of tables");

  DiagramArgs eval_a, coeffs_a, verify_a, disjoint_a;
  bool with_coeffs = false, normalize = false;
  auto* eval = app.add_subcommand("eval", "evaluate closed diagrams");
  eval_a.attach(eval);
  eval->add_flag("--coeffs", with_coeffs, "list every eps^k coefficient");
  eval->add_flag("--normalize", normalize, "divide by the unknot per component");

  auto* coeffs = app.add_subcommand("coeffs", "eps^k coefficients of closed diagrams");
  coeffs_a.attach(coeffs);

  std::optional<unsigned> max_singular;
  auto* verify = app.add_subcommand("verify-type", "sweep singularizations against the type bound");
  verify_a.attach(verify);
  verify->add_option("--max-singular", max_singular, "largest number of singular points (default order + 1)");

  std::string axioms_data;
  auto* axioms = app.add_subcommand("axioms", "check the tortile relations of a data set");
  axioms->add_option("--data", axioms_data, "tortile data file or kauffman:<order>")->required();

  FunctorArgs coh_a, ext_a;
  std::vector<unsigned> degrees{1, 2, 3};
  bool proper = false;
  auto* coh = app.add_subcommand("cohomology", "dimensions of the deformation complex");
  auto functor_opts = [](CLI::App* sub, FunctorArgs& fa) {
    sub->add_option("--presentation", fa.presentation, "presentation file or cyclic:<n>")->required();
    sub->add_option("--target", fa.target, "target presentation (default: the source)");
    sub->add_option("--functor", fa.functor, "functor file (default: identity)");
  };
  functor_opts(coh, coh_a);
  coh->add_option("--degree", degrees, "degrees, 1 to 4")->delimiter(',');
  coh->add_flag("--proper", proper, "restrict to proper cochains");

  std::string deformation, output;
  std::optional<unsigned> target_order;
  auto* ext = app.add_subcommand("extend", "extend a deformation order by order");
  functor_opts(ext, ext_a);
  ext->add_option("--deformation", deformation, "deformation file")->required();
  ext->add_option("--target-order", target_order, "order to reach (default: --order)");
  ext->add_option("--output", output, "write the extended series here (default: stdout)");

  std::string br_presentation;
  bool all_braidings = false;
  auto* br = app.add_subcommand("braiding-roundtrip", "braiding -> multiplication functor -> braiding");
  br->add_option("--presentation", br_presentation, "presentation file or cyclic:<n>")->required();
  br->add_flag("--all", all_braidings, "enumerate every braiding instead of the stored one");

  auto* disjoint = app.add_subcommand("check-disjoint", "multiplicativity on a disjoint union of two diagrams");
  disjoint_a.attach(disjoint);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*eval) return cmd_eval(eval_a, true, with_coeffs, normalize, g, out);
    if (*coeffs) return cmd_eval(coeffs_a, false, true, false, g, out);
    if (*verify) return cmd_verify_type(verify_a, max_singular, g, out, err);
    if (*axioms) return cmd_axioms(axioms_data, g, out);
    if (*coh) return cmd_cohomology(coh_a, degrees, proper, g, out, err);
    if (*ext) return cmd_extend(ext_a, deformation, target_order, output, g, out, err);
    if (*br) return cmd_braiding_roundtrip(br_presentation, all_braidings, g, out, err);
    if (*disjoint) return cmd_check_disjoint(disjoint_a, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qdef::cli
