#include "maxpair/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "maxpair/error.hpp"
#include "maxpair/numtheory.hpp"

namespace maxpair {

std::size_t PcPresentation::order() const {
  std::size_t n = 1;
  for (int p : rel_orders) n *= static_cast<std::size_t>(p);
  return n;
}

Word PcPresentation::conjugate(int j, int i) const {
  auto it = conj.find({j, i});
  if (it != conj.end()) return it->second;
  return Word{{{j, 1}}};
}

Word word_from_exponents(const ExponentVector& v) {
  Word w;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) w.factors.emplace_back(static_cast<int>(k), v[k]);
  return w;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& [g, e] : w.factors) {
    if (!out.empty()) out += ' ';
    out += 'g' + std::to_string(g + 1) + '^' + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    if (line[i] == ':') {
      out.push_back({line.substr(i, 1), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != ':')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::optional<long> to_integer(std::string_view s) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(text) {}

  PcPresentation run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t nl = text_.find('\n', pos);
      if (nl == std::string_view::npos) nl = text_.size();
      ++line_no_;
      std::string_view line = text_.substr(pos, nl - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle_line(line);
      pos = nl + 1;
      if (ended_) break;
    }
    if (!ended_) fail("missing 'end'", 1);
    if (!have_gens_) fail("missing 'gens' line", 1);
    if (static_cast<int>(next_order_) != n_)
      fail("expected an 'order' line for every generator", 1);
    return std::move(pres_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int column) const {
    throw ParseError(msg, line_no_, column);
  }

  int parse_generator(const Token& t, bool allow_bare) const {
    std::string_view s = t.text;
    if (!s.empty() && s.front() == 'g') {
      s.remove_prefix(1);
    } else if (!allow_bare) {
      fail("expected a generator 'g<k>', got '" + std::string(t.text) + "'", t.column);
    }
    auto k = to_integer(s);
    if (!k) fail("malformed generator '" + std::string(t.text) + "'", t.column);
    if (*k < 1 || *k > n_)
      fail("unknown generator '" + std::string(t.text) + "'", t.column);
    return static_cast<int>(*k) - 1;
  }

  Word parse_word(const std::vector<Token>& toks, std::size_t from, int above) const {
    Word w;
    if (from >= toks.size()) fail("expected a word after ':'", toks.back().column);
    if (toks.size() == from + 1 && toks[from].text == "1") return w;
    int last = -1;
    for (std::size_t k = from; k < toks.size(); ++k) {
      const Token& t = toks[k];
      std::string_view s = t.text;
      auto caret = s.find('^');
      Token gen_tok{s.substr(0, caret), t.column};
      int g = parse_generator(gen_tok, false);
      long e = 1;
      if (caret != std::string_view::npos) {
        auto parsed = to_integer(s.substr(caret + 1));
        if (!parsed) fail("malformed exponent in '" + std::string(s) + "'", t.column);
        e = *parsed;
      }
      if (g <= last) fail("word generators must appear in ascending order", t.column);
      if (e < 1 || e >= pres_.rel_orders[g])
        fail("exponent of g" + std::to_string(g + 1) + " out of range", t.column);
      if (g <= above)
        fail("relation word has support outside generators above g" +
                 std::to_string(above + 1),
             t.column);
      last = g;
      w.factors.emplace_back(g, static_cast<int>(e));
    }
    return w;
  }

  void handle_line(std::string_view line) {
    auto toks = tokenize(line);
    if (toks.empty()) return;
    const std::string_view kw = toks[0].text;
    if (kw == "group") {
      if (toks.size() < 2) fail("expected a group name", toks[0].column);
      std::size_t start = static_cast<std::size_t>(toks[1].column - 1);
      std::string_view name = line.substr(start);
      while (!name.empty() && (name.back() == ' ' || name.back() == '\r' || name.back() == '\t'))
        name.remove_suffix(1);
      pres_.name = std::string(name);
      have_group_ = true;
      return;
    }
    if (!have_group_) fail("expected 'group <name>' first", toks[0].column);
    if (kw == "gens") {
      if (have_gens_) fail("duplicate 'gens' line", toks[0].column);
      if (toks.size() != 2) fail("expected 'gens <n>'", toks[0].column);
      auto n = to_integer(toks[1].text);
      if (!n || *n < 0 || *n > 64) fail("invalid generator count", toks[1].column);
      n_ = static_cast<int>(*n);
      pres_.rel_orders.assign(n_, 0);
      pres_.power.assign(n_, Word{});
      have_gens_ = true;
      return;
    }
    if (!have_gens_) fail("expected 'gens <n>' before relations", toks[0].column);
    if (kw == "order") {
      if (toks.size() != 3) fail("expected 'order g<i> <prime>'", toks[0].column);
      int g = parse_generator(toks[1], true);
      if (g != static_cast<int>(next_order_))
        fail("'order' lines must list generators in ascending order", toks[1].column);
      auto p = to_integer(toks[2].text);
      if (!p || *p < 2 || *p > 65535 || !is_prime(static_cast<std::uint64_t>(*p)))
        fail("relative order must be prime", toks[2].column);
      pres_.rel_orders[g] = static_cast<int>(*p);
      ++next_order_;
      return;
    }
    if (kw == "pow" || kw == "conj") {
      if (static_cast<int>(next_order_) != n_)
        fail("all 'order' lines must precede relations", toks[0].column);
      const bool is_pow = kw == "pow";
      const std::size_t colon = is_pow ? 2 : 3;
      if (toks.size() <= colon || toks[colon].text != ":")
        fail(is_pow ? "expected 'pow <i> : <word>'" : "expected 'conj <j> <i> : <word>'",
             toks[0].column);
      if (is_pow) {
        int i = parse_generator(toks[1], true);
        if (seen_pow_.count(i)) fail("duplicate power relation", toks[1].column);
        seen_pow_.insert({i, true});
        pres_.power[i] = parse_word(toks, colon + 1, i);
      } else {
        int j = parse_generator(toks[1], true);
        int i = parse_generator(toks[2], true);
        if (j <= i) fail("conjugate relation requires j > i", toks[2].column);
        if (pres_.conj.count({j, i})) fail("duplicate conjugate relation", toks[1].column);
        pres_.conj[{j, i}] = parse_word(toks, colon + 1, i);
      }
      return;
    }
    if (kw == "end") {
      if (toks.size() != 1) fail("unexpected text after 'end'", toks[1].column);
      ended_ = true;
      return;
    }
    fail("unknown directive '" + std::string(kw) + "'", toks[0].column);
  }

  std::string_view text_;
  PcPresentation pres_;
  int line_no_ = 0;
  int n_ = 0;
  std::size_t next_order_ = 0;
  bool have_group_ = false;
  bool have_gens_ = false;
  bool ended_ = false;
  std::map<int, bool> seen_pow_;
};

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  return PresentationParser(text).run();
}

std::string render_presentation(const PcPresentation& pres) {
  std::ostringstream out;
  out << "group " << pres.name << '\n';
  out << "gens " << pres.generator_count() << '\n';
  for (std::size_t i = 0; i < pres.rel_orders.size(); ++i)
    out << "order g" << i + 1 << ' ' << pres.rel_orders[i] << '\n';
  for (std::size_t i = 0; i < pres.power.size(); ++i)
    if (!pres.power[i].empty())
      out << "pow " << i + 1 << " : " << render_word(pres.power[i]) << '\n';
  for (const auto& [key, w] : pres.conj)
    out << "conj " << key.first + 1 << ' ' << key.second + 1 << " : " << render_word(w) << '\n';
  out << "end\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Collection

Collector::Collector(const PcPresentation& pres) : pres_(pres) {
  const int n = static_cast<int>(pres.generator_count());
  conj_table_.assign(n, std::vector<Word>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) conj_table_[j][i] = pres.conjugate(j, i);

  generator_orders_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    ExponentVector v(n, 0);
    int k = 0;
    do {
      multiply_generator(v, i);
      ++k;
    } while (std::any_of(v.begin(), v.end(), [](int e) { return e != 0; }) && k <= (1 << 20));
    generator_orders_[i] = k;
  }
}

void Collector::multiply_generator(ExponentVector& v, int i) const {
  const int n = static_cast<int>(v.size());
  // u * g_i = prefix * g_i^{e_i + 1} * prod_{k > i} (g_k^{g_i})^{e_k}
  int suffix_buf[64];
  for (int k = i + 1; k < n; ++k) {
    suffix_buf[k] = v[k];
    v[k] = 0;
  }
  if (++v[i] == pres_.rel_orders[i]) {
    v[i] = 0;
    multiply_word(v, pres_.power[i]);
  }
  for (int k = i + 1; k < n; ++k)
    for (int r = 0; r < suffix_buf[k]; ++r) multiply_word(v, conj_table_[k][i]);
}

void Collector::multiply_word(ExponentVector& v, const Word& w) const {
  for (const auto& [g, e] : w.factors)
    for (int r = 0; r < e; ++r) multiply_generator(v, g);
}

ExponentVector Collector::collect(const Word& w) const {
  const int n = static_cast<int>(pres_.generator_count());
  ExponentVector v(n, 0);
  for (auto [g, e] : w.factors) {
    if (g < 0 || g >= n) throw PreconditionError("generator index out of range");
    const int m = generator_orders_[g];
    int reps = static_cast<int>(((static_cast<long>(e) % m) + m) % m);
    for (int r = 0; r < reps; ++r) multiply_generator(v, g);
  }
  return v;
}

Word normal_form(const PcPresentation& pres, const Word& w) {
  Collector c(pres);
  return word_from_exponents(c.collect(w));
}

}  // namespace maxpair
