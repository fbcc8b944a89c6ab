#include "maxpair/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "maxpair/actions.hpp"
#include "maxpair/build.hpp"
#include "maxpair/error.hpp"
#include "maxpair/presentation.hpp"

namespace maxpair {

Json group_to_json(const Group& g) {
  Json doc;
  doc["schema"] = kGroupSchema;
  doc["label"] = g.label();
  doc["n"] = g.order();
  doc["gens"] = g.gens();
  doc["mul"] = g.table();
  return doc;
}

GroupPtr group_from_json(const Json& doc) {
  try {
    if (doc.at("schema").get<std::string>() != kGroupSchema)
      throw ParseError("unsupported schema " + doc.at("schema").dump(), 1, 1);
    const auto n = doc.at("n").get<std::size_t>();
    check_cap(n, "group file");
    auto table = doc.at("mul").get<std::vector<Elem>>();
    if (table.size() != n * n) throw ParseError("mul must have n*n entries", 1, 1);
    return group_from_table(doc.at("label").get<std::string>(), n, std::move(table),
                            doc.at("gens").get<std::vector<Elem>>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad group document: ") + e.what(), 1, 1);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad group document: ") + e.what(), 1, 1);
  }
}

std::string serialize_group(const Group& g) {
  if (g.presentation()) return render_presentation(*g.presentation());
  return group_to_json(g).dump() + "\n";
}

GroupPtr read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.what(), 1, 1);
    }
    return group_from_json(doc);
  }
  return build_group(parse_presentation(text));
}

Json subgroup_to_json(const Subgroup& h) {
  Json j;
  j["order"] = h.order();
  j["generators"] = h.generators();
  j["elements"] = h.elements();
  return j;
}

Json character_to_json(const CharacterValue& c) {
  return Json{{"modulus", c.modulus},
              {"value", c.value},
              {"order", c.order},
              {"section_value", c.section_value},
              {"section_exponent", c.section_exponent}};
}

namespace {

Json optional_subgroup(const std::optional<Subgroup>& h) {
  return h ? subgroup_to_json(*h) : Json(nullptr);
}

}  // namespace

Json dmax_to_json(const MaximalityReport& r) {
  Json doc;
  doc["schema"] = kDmaxSchema;
  doc["group"] = r.label;
  doc["d"] = r.d;
  doc["is_d_maximal"] = r.is_d_maximal;
  doc["subgroups"] = r.subgroups;
  doc["witness"] = optional_subgroup(r.witness);
  doc["witness_rank"] = r.witness ? Json(r.witness_rank) : Json(nullptr);
  doc["timings"] = {{"seconds", r.seconds}};
  return doc;
}

Json pair_to_json(const std::string& label, const PairCheckReport& r,
                  const StructuralReport* structural) {
  Json doc;
  doc["schema"] = kPairSchema;
  doc["group"] = label;
  doc["p"] = r.p;
  doc["q"] = r.q;
  doc["d"] = r.d;
  doc["verdict"] = r.verdict();
  Json a{{"holds", r.cond_a}, {"witness", optional_subgroup(r.witness_a)}};
  a["witness_rank"] = r.witness_a ? Json(r.witness_a_rank) : Json(nullptr);
  Json b{{"holds", r.cond_b},
         {"character", r.character ? character_to_json(*r.character) : Json(nullptr)},
         {"witness", r.witness_b.empty() ? Json(nullptr) : Json(r.witness_b)}};
  Json c{{"holds", r.cond_c},
         {"witness", optional_subgroup(r.witness_c)},
         {"witness_character",
          r.witness_c_character ? character_to_json(*r.witness_c_character) : Json(nullptr)}};
  doc["conditions"] = {{"a", a}, {"b", b}, {"c", c}};
  if (structural) {
    Json rows = Json::array();
    for (const auto& s : structural->assertions)
      rows.push_back({{"id", s.id},
                      {"statement", s.statement},
                      {"verdict", to_string(s.verdict)},
                      {"detail", s.detail}});
    doc["assertions"] = rows;
    doc["structural_pass"] = structural->passed();
  }
  doc["timings"] = {{"seconds", r.seconds}};
  return doc;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(const Group& g, std::string_view text)
      : g_(g), text_(text), pc_(g.presentation() ? pc_generator_elements(g) : g.gens()) {}

  void parse(std::vector<Elem>& gens, std::vector<Elem>& images) {
    skip();
    while (pos_ < text_.size()) {
      gens.push_back(element());
      skip();
      expect("->");
      images.push_back(product());
      skip();
      if (pos_ < text_.size()) expect(",");
      skip();
    }
    if (gens.empty()) fail("empty automorphism literal");
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  long number() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) fail("expected a number");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Elem element() {
    skip();
    if (pos_ >= text_.size()) fail("expected an element");
    Elem x = 0;
    if (text_[pos_] == 'g') {
      ++pos_;
      const long k = number();
      if (k < 1 || static_cast<std::size_t>(k) > pc_.size()) fail("no generator g" + std::to_string(k));
      x = pc_[static_cast<std::size_t>(k - 1)];
    } else if (text_[pos_] == '#') {
      ++pos_;
      const long i = number();
      if (i < 0 || static_cast<std::size_t>(i) >= g_.order()) fail("element index out of range");
      x = static_cast<Elem>(i);
    } else if (text_[pos_] == '1') {
      ++pos_;
    } else {
      fail("expected g<k>, #<index> or 1");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      x = g_.pow(x, number());
    }
    return x;
  }

  Elem product() {
    Elem x = element();
    for (skip(); pos_ < text_.size() && text_[pos_] != ','; skip()) x = g_.mul(x, element());
    return x;
  }

  const Group& g_;
  std::string_view text_;
  std::vector<Elem> pc_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupMap parse_automorphism(const GroupPtr& g, std::string_view text) {
  std::vector<Elem> gens, images;
  LiteralParser(*g, text).parse(gens, images);
  return hom_from_images(g, g, gens, images);
}

}  // namespace maxpair
