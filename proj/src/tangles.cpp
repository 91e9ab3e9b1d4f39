#include "qdef/tangles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <regex>
#include <sstream>

#include "qdef/errors.hpp"

namespace qdef {

namespace {

using O = Orient;

struct KindInfo {
  const char* name;
  Signature in, out;
};

const std::array<KindInfo, 12>& kind_table() {
  static const std::array<KindInfo, 12> table{{
      {"IdUp", {O::Up}, {O::Up}},
      {"IdDown", {O::Down}, {O::Down}},
      {"CupR", {}, {O::Down, O::Up}},
      {"CupL", {}, {O::Up, O::Down}},
      {"CapR", {O::Up, O::Down}, {}},
      {"CapL", {O::Down, O::Up}, {}},
      {"CrPos", {O::Up, O::Up}, {O::Up, O::Up}},
      {"CrNeg", {O::Up, O::Up}, {O::Up, O::Up}},
      {"CrSing", {O::Up, O::Up}, {O::Up, O::Up}},
      {"TwPos", {O::Up}, {O::Up}},
      {"TwNeg", {O::Up}, {O::Up}},
      {"TwSing", {O::Up}, {O::Up}},
  }};
  return table;
}

std::string sig_string(const Signature& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? " " : "") + std::string(s[i] == O::Up ? "U" : "D");
  return r + "]";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view tok, const std::string& source, int line) {
  std::string t(trim(tok));
  if (t.empty()) throw ParseError(source, line, "expected an integer");
  std::size_t used = 0;
  long long v;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ParseError(source, line, "bad integer '" + t + "'");
  }
  if (used != t.size()) throw ParseError(source, line, "bad integer '" + t + "'");
  return v;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t make() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

const char* slice_name(SliceKind k) { return kind_table()[static_cast<std::size_t>(k)].name; }

SliceKind slice_kind_from_name(std::string_view name) {
  const auto& t = kind_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (name == t[i].name) return static_cast<SliceKind>(i);
  throw ParseError("unknown slice '" + std::string(name) + "'");
}

const Signature& slice_input(SliceKind k) { return kind_table()[static_cast<std::size_t>(k)].in; }
const Signature& slice_output(SliceKind k) { return kind_table()[static_cast<std::size_t>(k)].out; }
bool is_singular(SliceKind k) { return k == SliceKind::CrSing || k == SliceKind::TwSing; }

Boundary validate(const MorseDiagram& d) {
  Signature cur = d.source;
  for (std::size_t i = 0; i < d.slices.size(); ++i) {
    const Slice& s = d.slices[i];
    const Signature& in = slice_input(s.kind);
    if (s.offset + in.size() > cur.size())
      throw ValidationError(i + 1, std::string(slice_name(s.kind)) + " at offset " + std::to_string(s.offset) +
                                       " runs past the " + std::to_string(cur.size()) + " available strands");
    if (!std::equal(in.begin(), in.end(), cur.begin() + static_cast<std::ptrdiff_t>(s.offset)))
      throw ValidationError(i + 1, std::string(slice_name(s.kind)) + " expects " + sig_string(in) + " at offset " +
                                       std::to_string(s.offset) + " in " + sig_string(cur));
    const Signature& out = slice_output(s.kind);
    auto at = cur.begin() + static_cast<std::ptrdiff_t>(s.offset);
    at = cur.erase(at, at + static_cast<std::ptrdiff_t>(in.size()));
    cur.insert(at, out.begin(), out.end());
  }
  if (cur != d.target)
    throw ValidationError(d.slices.size() + 1, "top signature " + sig_string(cur) + " differs from target " +
                                                   sig_string(d.target));
  return {d.source, d.target};
}

std::vector<Signature> signatures(const MorseDiagram& d) {
  std::vector<Signature> out{d.source};
  Signature cur = d.source;
  for (const Slice& s : d.slices) {
    const Signature& in = slice_input(s.kind);
    const Signature& o = slice_output(s.kind);
    auto at = cur.begin() + static_cast<std::ptrdiff_t>(s.offset);
    at = cur.erase(at, at + static_cast<std::ptrdiff_t>(in.size()));
    cur.insert(at, o.begin(), o.end());
    out.push_back(cur);
  }
  return out;
}

std::size_t component_count(const MorseDiagram& d) {
  validate(d);
  UnionFind uf;
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < d.source.size(); ++i) ids.push_back(uf.make());
  for (const Slice& s : d.slices) {
    auto at = ids.begin() + static_cast<std::ptrdiff_t>(s.offset);
    switch (s.kind) {
      case SliceKind::CupR:
      case SliceKind::CupL: {
        std::size_t id = uf.make();
        ids.insert(at, {id, id});
        break;
      }
      case SliceKind::CapR:
      case SliceKind::CapL:
        uf.join(at[0], at[1]);
        ids.erase(at, at + 2);
        break;
      case SliceKind::CrPos:
      case SliceKind::CrNeg:
      case SliceKind::CrSing:
        std::swap(at[0], at[1]);
        break;
      default:
        break;
    }
  }
  std::size_t n = 0;
  for (std::size_t x = 0; x < uf.parent.size(); ++x) n += uf.find(x) == x;
  return n;
}

void BraidWord::check() const {
  if (strands == 0) throw ParseError("a braid needs at least one strand");
  for (int l : letters)
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands)
      throw ParseError("letter " + std::to_string(l) + " out of range for " + std::to_string(strands) + " strands");
  if (!framings.empty() && framings.size() != strands)
    throw ParseError("expected " + std::to_string(strands) + " framings, got " + std::to_string(framings.size()));
  for (std::size_t p : singular_letters)
    if (p == 0 || p > letters.size()) throw ParseError("singular letter position " + std::to_string(p) + " out of range");
  for (auto [s, c] : singular_twists) {
    (void)c;
    if (s == 0 || s > strands) throw ParseError("singular twist strand " + std::to_string(s) + " out of range");
  }
}

std::size_t BraidWord::permutation_cycles() const {
  std::vector<std::size_t> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int l : letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(strands, false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < strands; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

MorseDiagram trace_closure(const BraidWord& b) {
  b.check();
  const std::size_t k = b.strands;
  MorseDiagram d;
  for (std::size_t i = 0; i < k; ++i) d.slices.push_back({SliceKind::CupL, i});
  for (std::size_t i = 0; i < k && i < b.framings.size(); ++i) {
    int f = b.framings[i];
    for (int j = 0; j < std::abs(f); ++j) d.slices.push_back({f > 0 ? SliceKind::TwPos : SliceKind::TwNeg, i});
  }
  for (auto [s, c] : b.singular_twists)
    for (std::size_t j = 0; j < c; ++j) d.slices.push_back({SliceKind::TwSing, s - 1});
  for (std::size_t p = 0; p < b.letters.size(); ++p) {
    int l = b.letters[p];
    bool sing = std::find(b.singular_letters.begin(), b.singular_letters.end(), p + 1) != b.singular_letters.end();
    SliceKind kind = sing ? SliceKind::CrSing : (l > 0 ? SliceKind::CrPos : SliceKind::CrNeg);
    d.slices.push_back({kind, static_cast<std::size_t>(std::abs(l)) - 1});
  }
  for (std::size_t i = k; i-- > 0;) d.slices.push_back({SliceKind::CapR, i});
  return d;
}

MorseDiagram disjoint_union(const MorseDiagram& a, const MorseDiagram& b) {
  if (!a.is_closed() || !b.is_closed()) throw BoundaryError("disjoint union needs closed diagrams");
  MorseDiagram r = a;
  r.slices.insert(r.slices.end(), b.slices.begin(), b.slices.end());
  return r;
}

std::size_t singular_count(const MorseDiagram& d) {
  return static_cast<std::size_t>(
      std::count_if(d.slices.begin(), d.slices.end(), [](const Slice& s) { return is_singular(s.kind); }));
}

std::vector<std::size_t> singularizable_positions(const MorseDiagram& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.slices.size(); ++i) {
    SliceKind k = d.slices[i].kind;
    if (k == SliceKind::CrPos || k == SliceKind::CrNeg || k == SliceKind::TwPos || k == SliceKind::TwNeg)
      out.push_back(i);
  }
  return out;
}

MorseDiagram singularize(const MorseDiagram& d, const std::vector<std::size_t>& positions) {
  MorseDiagram r = d;
  for (std::size_t p : positions) {
    if (p >= r.slices.size()) throw PreconditionError("slice index " + std::to_string(p) + " out of range");
    SliceKind& k = r.slices[p].kind;
    if (k == SliceKind::CrPos || k == SliceKind::CrNeg)
      k = SliceKind::CrSing;
    else if (k == SliceKind::TwPos || k == SliceKind::TwNeg)
      k = SliceKind::TwSing;
    else
      throw PreconditionError("slice " + std::to_string(p) + " (" + slice_name(k) + ") is not a crossing or twist");
  }
  return r;
}

BraidWord parse_braid(std::string_view text, const std::string& source) {
  BraidWord b;
  bool have_strands = false;
  std::string body(text);
  std::replace(body.begin(), body.end(), '\n', ';');
  std::stringstream ss(body);
  std::string field;
  while (std::getline(ss, field, ';')) {
    std::string_view f = trim(field);
    if (f.empty() || f.front() == '#') continue;
    auto eq = f.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, 1, "expected key=value, got '" + std::string(f) + "'");
    std::string key(trim(f.substr(0, eq)));
    std::string value(trim(f.substr(eq + 1)));
    if (key == "strands") {
      long long k = parse_int(value, source, 1);
      if (k <= 0) throw ParseError(source, 1, "strands must be positive");
      b.strands = static_cast<std::size_t>(k);
      have_strands = true;
    } else if (key == "word") {
      std::stringstream ws(value);
      std::string tok;
      while (ws >> tok) {
        bool neg = tok.front() == '-';
        std::string_view t(tok);
        if (neg) t.remove_prefix(1);
        if (!t.empty() && (t.front() == 's' || t.front() == 'S')) t.remove_prefix(1);
        long long i = parse_int(t, source, 1);
        if (i <= 0) throw ParseError(source, 1, "bad braid letter '" + tok + "'");
        b.letters.push_back(static_cast<int>(neg ? -i : i));
      }
    } else if (key == "framings") {
      std::stringstream fs(value);
      std::string tok;
      while (std::getline(fs, tok, ','))
        if (!trim(tok).empty()) b.framings.push_back(static_cast<int>(parse_int(tok, source, 1)));
    } else if (key == "singular") {
      std::stringstream fs(value);
      std::string tok;
      while (std::getline(fs, tok, ','))
        if (!trim(tok).empty()) {
          long long p = parse_int(tok, source, 1);
          if (p <= 0) throw ParseError(source, 1, "singular positions are 1-based");
          b.singular_letters.push_back(static_cast<std::size_t>(p));
        }
    } else if (key == "singular_twists") {
      static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
      for (std::sregex_iterator it(value.begin(), value.end(), pair_re), end; it != end; ++it)
        b.singular_twists.emplace_back(std::stoul((*it)[1]), std::stoul((*it)[2]));
      std::string leftover = std::regex_replace(value, pair_re, "");
      if (leftover.find_first_not_of(" ,\t") != std::string::npos)
        throw ParseError(source, 1, "bad singular_twists '" + value + "'");
    } else {
      throw ParseError(source, 1, "unknown braid key '" + key + "'");
    }
  }
  if (!have_strands) throw ParseError(source, 1, "missing strands=");
  if (b.framings.empty()) b.framings.assign(b.strands, 0);
  try {
    b.check();
  } catch (const ParseError& e) {
    throw ParseError(source, 1, e.what());
  }
  return b;
}

MorseDiagram parse_morse(std::string_view text, const std::string& source) {
  MorseDiagram d;
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::stringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "source" || head == "target") {
      Signature& sig = head == "source" ? d.source : d.target;
      std::string tok;
      while (ls >> tok) {
        if (tok == "U" || tok == "Up")
          sig.push_back(O::Up);
        else if (tok == "D" || tok == "Down")
          sig.push_back(O::Down);
        else
          throw ParseError(source, lineno, "bad strand label '" + tok + "'");
      }
      continue;
    }
    SliceKind kind;
    try {
      kind = slice_kind_from_name(head);
    } catch (const ParseError& e) {
      throw ParseError(source, lineno, e.what());
    }
    std::string off, extra;
    if (!(ls >> off)) throw ParseError(source, lineno, "missing offset");
    if (ls >> extra) throw ParseError(source, lineno, "trailing text '" + extra + "'");
    long long o = parse_int(off, source, lineno);
    if (o < 0) throw ParseError(source, lineno, "negative offset");
    d.slices.push_back({kind, static_cast<std::size_t>(o)});
  }
  return d;
}

std::string format_braid(const BraidWord& b) {
  std::ostringstream os;
  os << "strands=" << b.strands << "; word=";
  for (std::size_t i = 0; i < b.letters.size(); ++i)
    os << (i ? " " : "") << (b.letters[i] < 0 ? "-s" : "s") << std::abs(b.letters[i]);
  os << "; framings=";
  for (std::size_t i = 0; i < b.framings.size(); ++i) os << (i ? "," : "") << b.framings[i];
  if (!b.singular_letters.empty()) {
    os << "; singular=";
    for (std::size_t i = 0; i < b.singular_letters.size(); ++i) os << (i ? "," : "") << b.singular_letters[i];
  }
  if (!b.singular_twists.empty()) {
    os << "; singular_twists=";
    for (auto [s, c] : b.singular_twists) os << "(" << s << "," << c << ")";
  }
  return os.str();
}

std::string format_morse(const MorseDiagram& d) {
  std::ostringstream os;
  auto sig = [&](const char* name, const Signature& s) {
    if (s.empty()) return;
    os << name;
    for (O o : s) os << (o == O::Up ? " U" : " D");
    os << "\n";
  };
  sig("source", d.source);
  sig("target", d.target);
  for (const Slice& s : d.slices) os << slice_name(s.kind) << " " << s.offset << "\n";
  return os.str();
}

}  // namespace qdef
