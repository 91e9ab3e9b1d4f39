#include "qdef/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "qdef/errors.hpp"

namespace qdef {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;  // left of "->", whitespace split
  std::string value;               // right of "->", trimmed; empty if absent
  bool has_arrow = false;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::stringstream ss{std::string(text)};
  std::string raw;
  int n = 0;
  while (std::getline(ss, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    Line l{n, {}, {}, false};
    std::string lhs = raw;
    if (auto a = raw.find("->"); a != std::string::npos) {
      lhs = raw.substr(0, a);
      l.value = trim(raw.substr(a + 2));
      l.has_arrow = true;
    }
    std::stringstream ls(lhs);
    std::string w;
    while (ls >> w) l.words.push_back(w);
    if (!l.words.empty() || l.has_arrow) out.push_back(std::move(l));
  }
  return out;
}

template <class F>
auto at_line(const std::string& source, int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(source, line, e.what());
  } catch (const Error& e) {
    throw ParseError(source, line, e.what());
  }
}

FieldElem scalar_value(const Line& l, const Field& f, const std::string& source) {
  if (!l.has_arrow || l.value.empty()) throw ParseError(source, l.number, "expected '-> value'");
  return at_line(source, l.number, [&] { return FieldElem::parse(f, l.value); });
}

unsigned parse_unsigned(const std::string& w, const std::string& source, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(w, &used);
    if (used == w.size() && v >= 0) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw ParseError(source, line, "expected a non-negative integer, got '" + w + "'");
}

std::vector<Obj> tuple_of(const SkeletalPresentation& p, const std::vector<std::string>& words, std::size_t from,
                          std::size_t count, const std::string& source, int line) {
  if (words.size() != from + count)
    throw ParseError(source, line, "expected " + std::to_string(count) + " object names");
  std::vector<Obj> t;
  for (std::size_t i = from; i < words.size(); ++i)
    t.push_back(at_line(source, line, [&] { return p.index_of(words[i]); }));
  return t;
}

void write_tuple_line(std::ostream& os, const std::string& head, const SkeletalPresentation& p,
                      const std::vector<Obj>& t, const FieldElem& v) {
  os << head;
  for (std::size_t i = 0; i < t.size(); ++i) os << (head.empty() && i == 0 ? "" : " ") << p.name(t[i]);
  os << " -> " << v.to_string() << "\n";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SkeletalPresentation parse_presentation(std::string_view text, const std::string& source) {
  auto lines = lines_of(text);
  std::optional<Field> field;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> grid;
  int tensor_line = 0;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& head = l.words.empty() ? std::string() : l.words[0];
    if (head == "field") {
      if (l.words.size() != 2) throw ParseError(source, l.number, "expected 'field Q' or 'field Fp:<p>'");
      field = at_line(source, l.number, [&] { return Field::parse(l.words[1]); });
    } else if (head == "objects") {
      names.assign(l.words.begin() + 1, l.words.end());
      if (names.empty()) throw ParseError(source, l.number, "empty object list");
    } else if (head == "tensor") {
      if (names.empty()) throw ParseError(source, l.number, "tensor table before the object list");
      tensor_line = l.number;
      for (std::size_t r = 0; r < names.size(); ++r) {
        if (++i >= lines.size()) throw ParseError(source, l.number, "tensor table is missing rows");
        if (lines[i].words.size() != names.size() || lines[i].has_arrow)
          throw ParseError(source, lines[i].number, "tensor row needs " + std::to_string(names.size()) + " entries");
        grid.push_back(lines[i].words);
      }
      ++i;
      break;
    } else {
      throw ParseError(source, l.number, "expected field, objects or tensor, got '" + head + "'");
    }
  }
  if (!field) throw ParseError(source, 1, "missing field header");
  if (grid.empty()) throw ParseError(source, 1, "missing tensor table");
  std::vector<Obj> table;
  auto index = [&](const std::string& n, int line) -> Obj {
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == n) return k;
    throw ParseError(source, line, "unknown object '" + n + "'");
  };
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (const auto& w : grid[r]) table.push_back(index(w, tensor_line + static_cast<int>(r) + 1));
  SkeletalPresentation p =
      at_line(source, tensor_line, [&] { return SkeletalPresentation(*field, names, table); });

  for (; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& head = l.words.empty() ? std::string() : l.words[0];
    if (head == "alpha") {
      auto t = tuple_of(p, l.words, 1, 3, source, l.number);
      auto v = scalar_value(l, p.field(), source);
      at_line(source, l.number, [&] { p.set_alpha(t[0], t[1], t[2], v); });
    } else if (head == "rho" || head == "lambda") {
      auto t = tuple_of(p, l.words, 1, 1, source, l.number);
      auto v = scalar_value(l, p.field(), source);
      at_line(source, l.number, [&] { head == "rho" ? p.set_rho(t[0], v) : p.set_lambda(t[0], v); });
    } else if (head == "sigma") {
      auto t = tuple_of(p, l.words, 1, 2, source, l.number);
      auto v = scalar_value(l, p.field(), source);
      at_line(source, l.number, [&] { p.set_sigma(t[0], t[1], v); });
    } else if (head == "braided" && l.words.size() == 1 && !l.has_arrow) {
      if (!p.braided()) p.set_trivial_braiding();
    } else {
      throw ParseError(source, l.number, "unexpected line '" + head + "'");
    }
  }
  return p;
}

std::string format_presentation(const SkeletalPresentation& p) {
  std::ostringstream os;
  os << "field " << p.field().to_string() << "\nobjects";
  for (const auto& n : p.names()) os << " " << n;
  os << "\ntensor\n";
  const std::size_t n = p.size();
  for (Obj a = 0; a < n; ++a) {
    for (Obj b = 0; b < n; ++b) os << (b ? " " : "") << p.name(p.mul(a, b));
    os << "\n";
  }
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b)
      for (Obj c = 0; c < n; ++c)
        if (!p.alpha(a, b, c).is_one()) os << "alpha " << p.name(a) << " " << p.name(b) << " " << p.name(c) << " -> " << p.alpha(a, b, c).to_string() << "\n";
  for (Obj a = 0; a < n; ++a) {
    if (!p.rho(a).is_one()) os << "rho " << p.name(a) << " -> " << p.rho(a).to_string() << "\n";
    if (!p.lambda(a).is_one()) os << "lambda " << p.name(a) << " -> " << p.lambda(a).to_string() << "\n";
  }
  if (p.braided()) {
    os << "braided\n";
    for (Obj a = 0; a < n; ++a)
      for (Obj b = 0; b < n; ++b)
        if (!p.sigma(a, b).is_one()) os << "sigma " << p.name(a) << " " << p.name(b) << " -> " << p.sigma(a, b).to_string() << "\n";
  }
  return os.str();
}

FunctorPresentation parse_functor(std::string_view text, std::shared_ptr<const SkeletalPresentation> src,
                                  std::shared_ptr<const SkeletalPresentation> dst, const std::string& source) {
  auto lines = lines_of(text);
  std::vector<Obj> map(src->size());
  for (Obj a = 0; a < map.size(); ++a) map[a] = a < dst->size() ? a : 0;
  std::vector<const Line*> rest;
  for (const Line& l : lines) {
    if (!l.words.empty() && l.words[0] == "map") {
      if (l.words.size() != 2 || !l.has_arrow) throw ParseError(source, l.number, "expected 'map a -> b'");
      Obj a = at_line(source, l.number, [&] { return src->index_of(l.words[1]); });
      map[a] = at_line(source, l.number, [&] { return dst->index_of(l.value); });
    } else {
      rest.push_back(&l);
    }
  }
  if (!(src->field() == dst->field())) throw ParseError(source, 1, "source and target fields differ");
  FunctorPresentation f = at_line(source, 1, [&] { return FunctorPresentation(src, dst, map); });
  for (const Line* l : rest) {
    const std::string& head = l->words.empty() ? std::string() : l->words[0];
    if (head == "coherence") {
      auto t = tuple_of(*src, l->words, 1, 2, source, l->number);
      auto v = scalar_value(*l, src->field(), source);
      at_line(source, l->number, [&] { f.set_coherence(t[0], t[1], v); });
    } else if (head == "unit" && l->words.size() == 1) {
      auto v = scalar_value(*l, src->field(), source);
      at_line(source, l->number, [&] { f.set_unit_scalar(v); });
    } else {
      throw ParseError(source, l->number, "unexpected line '" + head + "'");
    }
  }
  return f;
}

std::string format_functor(const FunctorPresentation& f) {
  std::ostringstream os;
  const auto& s = f.source();
  for (Obj a = 0; a < s.size(); ++a) os << "map " << s.name(a) << " -> " << f.target().name(f.map(a)) << "\n";
  for (Obj a = 0; a < s.size(); ++a)
    for (Obj b = 0; b < s.size(); ++b)
      if (!f.coherence(a, b).is_one())
        os << "coherence " << s.name(a) << " " << s.name(b) << " -> " << f.coherence(a, b).to_string() << "\n";
  if (!f.unit_scalar().is_one()) os << "unit -> " << f.unit_scalar().to_string() << "\n";
  return os.str();
}

namespace {

void read_entries(Cochain& c, const std::vector<Line>& lines, std::size_t from, std::size_t to,
                  const std::string& source) {
  const auto& p = c.functor().source();
  for (std::size_t i = from; i < to; ++i) {
    const Line& l = lines[i];
    auto t = tuple_of(p, l.words, 0, c.degree(), source, l.number);
    c.set(t, scalar_value(l, c.field(), source));
  }
}

}  // namespace

Cochain parse_cochain(std::string_view text, FunctorPtr f, const std::string& source) {
  auto lines = lines_of(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "degree" || lines[0].has_arrow)
    throw ParseError(source, lines.empty() ? 1 : lines[0].number, "expected 'degree n'");
  unsigned n = parse_unsigned(lines[0].words[1], source, lines[0].number);
  if (n == 0 || n > 6) throw ParseError(source, lines[0].number, "degree must be between 1 and 6");
  Cochain c(f, n);
  read_entries(c, lines, 1, lines.size(), source);
  return c;
}

std::string format_cochain(const Cochain& c) {
  std::ostringstream os;
  os << "degree " << c.degree() << "\n";
  const auto& p = c.functor().source();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) write_tuple_line(os, "", p, c.tuple(i), c[i]);
  return os.str();
}

DeformationSeries parse_deformation(std::string_view text, FunctorPtr f, const std::string& source) {
  auto lines = lines_of(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "order" || lines[0].has_arrow)
    throw ParseError(source, lines.empty() ? 1 : lines[0].number, "expected 'order n'");
  unsigned order = parse_unsigned(lines[0].words[1], source, lines[0].number);
  DeformationSeries d{f, std::vector<Cochain>(order, Cochain(f, 2)), false};
  std::size_t i = 1;
  if (i < lines.size() && lines[i].words == std::vector<std::string>{"proper"} && !lines[i].has_arrow) {
    d.proper = true;
    ++i;
  }
  std::vector<bool> seen(order, false);
  while (i < lines.size()) {
    const Line& l = lines[i];
    if (l.words.size() != 2 || l.words[0] != "term" || l.has_arrow)
      throw ParseError(source, l.number, "expected 'term k'");
    unsigned k = parse_unsigned(l.words[1], source, l.number);
    if (k == 0 || k > order) throw ParseError(source, l.number, "term index out of range 1.." + std::to_string(order));
    if (seen[k - 1]) throw ParseError(source, l.number, "term " + std::to_string(k) + " given twice");
    seen[k - 1] = true;
    std::size_t j = i + 1;
    while (j < lines.size() && !(lines[j].words.size() == 2 && lines[j].words[0] == "term" && !lines[j].has_arrow)) ++j;
    read_entries(d.terms[k - 1], lines, i + 1, j, source);
    i = j;
  }
  return d;
}

std::string format_deformation(const DeformationSeries& d) {
  std::ostringstream os;
  os << "order " << d.order() << "\n";
  if (d.proper) os << "proper\n";
  for (std::size_t k = 0; k < d.terms.size(); ++k) {
    os << "term " << k + 1 << "\n";
    std::string body = format_cochain(d.terms[k]);
    os << body.substr(body.find('\n') + 1);
  }
  return os.str();
}

TortileObjectData parse_data(std::string_view text, const std::string& source) {
  static const char* kLabels[] = {"c_plus", "theta", "ev_r", "coev_r", "ev_l", "coev_l"};
  std::stringstream ss{std::string(text)};
  std::string raw;
  int n = 0;
  std::optional<Field> field;
  std::optional<unsigned> order;
  std::optional<std::size_t> dim;
  std::map<std::string, std::pair<int, std::string>> blocks;  // label -> (line, text)
  std::string current;
  while (std::getline(ss, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string t = trim(raw);
    if (t.empty()) continue;
    std::stringstream ls(t);
    std::string head, arg, extra;
    ls >> head;
    bool is_label = std::find(std::begin(kLabels), std::end(kLabels), head) != std::end(kLabels);
    if (is_label) {
      if (ls >> extra) throw ParseError(source, n, "trailing text after " + head);
      if (blocks.count(head)) throw ParseError(source, n, head + " given twice");
      blocks[head] = {n, ""};
      current = head;
      continue;
    }
    if (current.empty()) {
      if (!(ls >> arg) || (ls >> extra)) throw ParseError(source, n, "expected '<key> <value>'");
      if (head == "field")
        field = at_line(source, n, [&] { return Field::parse(arg); });
      else if (head == "order")
        order = parse_unsigned(arg, source, n);
      else if (head == "dim")
        dim = parse_unsigned(arg, source, n);
      else
        throw ParseError(source, n, "unknown header '" + head + "'");
      continue;
    }
    blocks[current].second += t + "\n";
  }
  if (!field) throw ParseError(source, 1, "missing field header");
  if (!order) throw ParseError(source, 1, "missing order header");
  if (!dim || *dim == 0) throw ParseError(source, 1, "missing or zero dim header");
  Ring ring{*field, *order};
  TortileObjectData t;
  t.dim = *dim;
  t.ring = ring;
  MatrixR* slots[] = {&t.c_plus, &t.theta, &t.ev_r, &t.coev_r, &t.ev_l, &t.coev_l};
  for (std::size_t k = 0; k < 6; ++k) {
    auto it = blocks.find(kLabels[k]);
    if (it == blocks.end()) throw ParseError(source, n, std::string("missing matrix ") + kLabels[k]);
    *slots[k] = at_line(source, it->second.first, [&] { return MatrixR::parse(ring, it->second.second); });
  }
  at_line(source, 1, [&] { t.check_shapes(); });
  return t;
}

std::string format_data(const TortileObjectData& t) {
  std::ostringstream os;
  os << "field " << t.ring.field.to_string() << "\norder " << t.order() << "\ndim " << t.dim << "\n";
  auto mat = [&](const char* label, const MatrixR& m) {
    os << label << "\n" << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).to_string();
      os << "\n";
    }
  };
  mat("c_plus", t.c_plus);
  mat("theta", t.theta);
  mat("ev_r", t.ev_r);
  mat("coev_r", t.coev_r);
  mat("ev_l", t.ev_l);
  mat("coev_l", t.coev_l);
  return os.str();
}

}  // namespace qdef
