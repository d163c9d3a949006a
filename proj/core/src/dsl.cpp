#include "siltkit/dsl.hpp"

#include <regex>
#include <sstream>

namespace siltkit {

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() && !isspace((unsigned char)line[j]) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

bool is_rational_token(const std::string& t) {
  static const std::regex re("^-?[0-9]+(/[0-9]+)?$");
  return std::regex_match(t, re);
}

Rat parse_rational(const std::string& t) {
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rat(mpz_class(t), 1);
  return Rat(mpz_class(t.substr(0, slash)), mpz_class(t.substr(slash + 1)));
}

}  // namespace

AlgebraPresentation parse_dsl(const std::string& text) {
  AlgebraPresentation pres;
  pres.name = "input";
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_any = false;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    saw_any = true;
    const std::string& head = toks[0].text;

    if (head == "algebra") {
      if (toks.size() < 2) throw syntax_error("algebra needs a name", lineno, toks[0].col);
      auto pos = line.find("algebra");
      std::string rest = line.substr(pos + 7);
      auto h = rest.find_first_not_of(" \t");
      auto t = rest.find('#');
      rest = rest.substr(h == std::string::npos ? 0 : h,
                         t == std::string::npos ? std::string::npos : t - h);
      while (!rest.empty() && isspace((unsigned char)rest.back())) rest.pop_back();
      pres.name = rest;
    } else if (head == "vertex") {
      if (toks.size() < 2) throw syntax_error("vertex needs at least one id", lineno, toks[0].col);
      for (size_t k = 1; k < toks.size(); ++k) {
        try {
          pres.quiver.add_vertex(toks[k].text);
        } catch (const input_error& e) {
          throw syntax_error(e.what(), lineno, toks[k].col);
        }
      }
    } else if (head == "arrow") {
      /* arrow a : v -> w [deg n] */
      if (toks.size() < 5 || toks[2].text != ":" || toks[4].text != "->")
        throw syntax_error("expected 'arrow <id> : <v> -> <w> [deg <n>]'", lineno, toks[0].col);
      if (toks.size() < 6) throw syntax_error("arrow is missing its target", lineno, toks[0].col);
      int degree = 0;
      if (toks.size() >= 8 && toks[6].text == "deg") {
        if (!is_rational_token(toks[7].text) || toks[7].text.find('/') != std::string::npos)
          throw syntax_error("deg expects an integer", lineno, toks[7].col);
        degree = std::stoi(toks[7].text);
      } else if (toks.size() != 6) {
        throw syntax_error("unexpected tokens after the arrow target", lineno, toks[6].col);
      }
      try {
        pres.quiver.add_arrow(toks[1].text, toks[3].text, toks[5].text, degree);
      } catch (const unknown_identifier& e) {
        throw unknown_identifier(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
      } catch (const input_error& e) {
        throw syntax_error(e.what(), lineno, toks[1].col);
      }
    } else if (head == "rel") {
      if (toks.size() < 2) throw syntax_error("empty relation", lineno, toks[0].col);
      LinComb rel;
      size_t k = 1;
      Rat sign = 1;
      bool expect_term = true;
      while (k < toks.size()) {
        if (toks[k].text == "+" || toks[k].text == "-") {
          if (expect_term) {
            sign = sign * (toks[k].text == "+" ? 1 : -1);  // leading sign
          } else {
            sign = toks[k].text == "+" ? 1 : -1;
            expect_term = true;
          }
          ++k;
          continue;
        }
        if (!expect_term)
          throw syntax_error("expected '+' or '-' between relation terms", lineno, toks[k].col);
        Rat coeff = sign;
        if (is_rational_token(toks[k].text) && k + 1 < toks.size() && toks[k + 1].text != "+" &&
            toks[k + 1].text != "-") {
          coeff = sign * parse_rational(toks[k].text);
          ++k;
        }
        if (k >= toks.size()) throw syntax_error("coefficient without a path", lineno, toks.back().col);
        /* path: ids joined by '*' */
        std::vector<int> arrows;
        std::stringstream ss(toks[k].text);
        std::string part;
        while (std::getline(ss, part, '*')) {
          if (part.empty()) throw syntax_error("empty arrow name in a path", lineno, toks[k].col);
          try {
            arrows.push_back(pres.quiver.arrow_index(part));
          } catch (const unknown_identifier& e) {
            throw unknown_identifier(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
          }
        }
        try {
          rel.add_term(make_path(pres.quiver, arrows), coeff);
        } catch (const input_error& e) {
          throw syntax_error(e.what(), lineno, toks[k].col);
        }
        ++k;
        expect_term = false;
        sign = 1;
      }
      if (expect_term) throw syntax_error("relation ends with a dangling sign", lineno, toks.back().col);
      if (!rel.parallel()) throw non_parallel_relation("relation terms are not parallel (line " +
                                                       std::to_string(lineno) + ")");
      if (!rel.zero()) pres.relations.push_back(std::move(rel));
    } else {
      throw syntax_error("unknown declaration '" + head + "'", lineno, toks[0].col);
    }
  }
  if (!saw_any) throw syntax_error("empty input", 1, 1);
  pres.check_admissible();
  return pres;
}

std::string print_dsl(const AlgebraPresentation& pres) {
  std::ostringstream os;
  os << "algebra " << pres.name << "\n";
  os << "vertex";
  for (const auto& v : pres.quiver.vertex_names) os << " " << v;
  os << "\n";
  for (const auto& a : pres.quiver.arrows) {
    os << "arrow " << a.name << " : " << pres.quiver.vertex_names[a.source] << " -> "
       << pres.quiver.vertex_names[a.target];
    if (a.degree != 0) os << " deg " << a.degree;
    os << "\n";
  }
  for (const auto& rel : pres.relations) {
    os << "rel";
    bool first = true;
    for (const auto& [w, c] : rel.terms) {
      Rat a = abs(c);
      os << (sgn(c) < 0 ? " -" : (first ? "" : " +"));
      os << " ";
      if (a != 1) os << a.get_str() << " ";
      for (size_t k = 0; k < w.arrows.size(); ++k) {
        if (k) os << "*";
        os << pres.quiver.arrows[w.arrows[k]].name;
      }
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace siltkit
