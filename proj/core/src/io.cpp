#include "flowcat/io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "line_parser.hpp"

namespace flowcat {

namespace {

using detail::LineParser;
using detail::Token;
using detail::is_id;
using detail::tokenize;

// Parses "end=(via;lower;upper)".
BrokenFlow parse_end(LineParser& lp) {
  const Token& t = lp.take("end=(via;lower-pt;upper-pt)");
  const std::string& s = t.text;
  if (s.rfind("end=(", 0) != 0 || s.back() != ')')
    lp.fail("expected end=(via;lower-pt;upper-pt), got '" + s + "'", t.col);
  std::string inner = s.substr(5, s.size() - 6);
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t semi = inner.find(';', start);
    if (semi == std::string::npos) {
      parts.push_back(inner.substr(start));
      break;
    }
    parts.push_back(inner.substr(start, semi - start));
    start = semi + 1;
  }
  if (parts.size() != 3 || !is_id(parts[0]) || !is_id(parts[1]) || !is_id(parts[2]))
    lp.fail("malformed endpoint '" + s + "'", t.col);
  return BrokenFlow{parts[0], parts[1], parts[2]};
}

// Parses "fr=0" / "label=1" style fields restricted to {0,1}.
int parse_bit_field(LineParser& lp, const std::string& key) {
  const Token& t = lp.take(key + "=<0|1>");
  const std::string want = key + "=";
  if (t.text.rfind(want, 0) != 0 || t.text.size() != want.size() + 1 ||
      (t.text.back() != '0' && t.text.back() != '1'))
    lp.fail("expected " + key + "=<0|1>, got '" + t.text + "'", t.col);
  return t.text.back() - '0';
}

}  // namespace

FlowCategory parse(const std::string& text) {
  FlowCategory cat;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;

  while (std::getline(in, raw)) {
    ++lineno;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    LineParser lp{lineno, toks};

    if (!saw_header) {
      lp.expect_literal("flowcat");
      lp.expect_literal("v1");
      lp.expect_end();
      saw_header = true;
      continue;
    }

    const Token& head = lp.take("directive");
    auto require_object = [&](const std::string& id, int col) -> int {
      if (!cat.has_object(id))
        lp.fail("unknown object '" + id + "' (objects must precede their moduli)", col);
      return cat.objects().at(id);
    };

    if (head.text == "object") {
      int col = toks.size() > 1 ? toks[1].col : head.col;
      std::string id = lp.take_id("object id");
      int grading = lp.take_int("grading");
      lp.expect_end();
      if (cat.has_object(id)) lp.fail("duplicate object id '" + id + "'", col);
      cat.add_object(id, grading);
    } else if (head.text == "points") {
      int ucol = toks.size() > 1 ? toks[1].col : head.col;
      std::string upper = lp.take_id("upper object id");
      int lcol = toks.size() > 2 ? toks[2].col : head.col;
      std::string lower = lp.take_id("lower object id");
      lp.expect_literal(":");
      int gu = require_object(upper, ucol);
      int gl = require_object(lower, lcol);
      if (gu - gl != 1)
        lp.fail("points require grading gap 1 between '" + upper + "' and '" +
                    lower + "'",
                ucol, Code::E_GRADING);
      if (lp.next >= toks.size())
        lp.fail("expected at least one point", head.col);
      while (lp.next < toks.size()) {
        const Token& t = lp.take("point");
        char sign = t.text.back();
        std::string id = t.text.substr(0, t.text.size() - 1);
        if ((sign != '+' && sign != '-') || !is_id(id))
          lp.fail("expected <pt-id>+ or <pt-id>-, got '" + t.text + "'", t.col);
        const ZeroModuli* m = cat.zero(upper, lower);
        if (m && m->find(id))
          lp.fail("duplicate point id '" + id + "' in moduli (" + upper + "," +
                      lower + ")",
                  t.col);
        cat.add_point(upper, lower, SignedPoint{id, sign == '+' ? +1 : -1});
      }
    } else if (head.text == "interval") {
      int ucol = toks.size() > 1 ? toks[1].col : head.col;
      std::string upper = lp.take_id("upper object id");
      int lcol = toks.size() > 2 ? toks[2].col : head.col;
      std::string lower = lp.take_id("lower object id");
      int icol = toks.size() > 3 ? toks[3].col : head.col;
      std::string id = lp.take_id("interval id");
      int fr = parse_bit_field(lp, "fr");
      BrokenFlow e1 = parse_end(lp);
      BrokenFlow e2 = parse_end(lp);
      lp.expect_end();
      int gu = require_object(upper, ucol);
      int gl = require_object(lower, lcol);
      if (gu - gl != 2)
        lp.fail("interval requires grading gap 2 between '" + upper + "' and '" +
                    lower + "'",
                ucol, Code::E_GRADING);
      const OneModuli* m = cat.one(upper, lower);
      if (m && (m->find_interval(id) || m->find_circle(id)))
        lp.fail("duplicate component id '" + id + "' in moduli (" + upper + "," +
                    lower + ")",
                icol);
      cat.add_interval(upper, lower, Interval{id, fr, e1, e2});
    } else if (head.text == "circle") {
      int ucol = toks.size() > 1 ? toks[1].col : head.col;
      std::string upper = lp.take_id("upper object id");
      int lcol = toks.size() > 2 ? toks[2].col : head.col;
      std::string lower = lp.take_id("lower object id");
      int ccol = toks.size() > 3 ? toks[3].col : head.col;
      std::string id = lp.take_id("circle id");
      int label = parse_bit_field(lp, "label");
      lp.expect_end();
      int gu = require_object(upper, ucol);
      int gl = require_object(lower, lcol);
      if (gu - gl != 2)
        lp.fail("circle requires grading gap 2 between '" + upper + "' and '" +
                    lower + "'",
                ucol, Code::E_GRADING);
      const OneModuli* m = cat.one(upper, lower);
      if (m && (m->find_interval(id) || m->find_circle(id)))
        lp.fail("duplicate component id '" + id + "' in moduli (" + upper + "," +
                    lower + ")",
                ccol);
      cat.add_circle(upper, lower, Circle{id, label});
    } else {
      lp.fail("unknown directive '" + head.text + "'", head.col);
    }
  }

  if (!saw_header) throw ParseError(1, 1, "missing 'flowcat v1' header");
  return cat;
}

std::string serialize(const FlowCategory& cat) {
  std::ostringstream out;
  out << "flowcat v1\n";
  for (const std::string& id : cat.objects_by_grading())
    out << "object " << id << " " << cat.objects().at(id) << "\n";

  // Zero- and one-dimensional moduli keys are disjoint (grading gap 1 vs 2),
  // so a merged lexicographic walk emits every moduli block once.
  std::vector<ModuliKey> keys;
  for (const auto& [key, m] : cat.zero_moduli())
    if (!m.empty()) keys.push_back(key);
  for (const auto& [key, m] : cat.one_moduli())
    if (!m.empty()) keys.push_back(key);
  std::sort(keys.begin(), keys.end());

  for (const ModuliKey& key : keys) {
    if (const ZeroModuli* zm = cat.zero(key.upper, key.lower); zm && !zm->empty()) {
      out << "points " << key.upper << " " << key.lower << " :";
      for (const SignedPoint& p : zm->points)
        out << " " << p.id << (p.sign > 0 ? '+' : '-');
      out << "\n";
    }
    if (const OneModuli* om = cat.one(key.upper, key.lower); om && !om->empty()) {
      for (const Interval& iv : om->intervals)
        out << "interval " << key.upper << " " << key.lower << " " << iv.id
            << " fr=" << iv.fr << " end=(" << iv.end1.via << ";" << iv.end1.lower
            << ";" << iv.end1.upper << ") end=(" << iv.end2.via << ";"
            << iv.end2.lower << ";" << iv.end2.upper << ")\n";
      for (const Circle& c : om->circles)
        out << "circle " << key.upper << " " << key.lower << " " << c.id
            << " label=" << c.label << "\n";
    }
  }
  return out.str();
}

}  // namespace flowcat
