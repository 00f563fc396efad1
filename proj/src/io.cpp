#include "braidforge/io.hpp"

#include <fstream>
#include <sstream>

namespace braidforge {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

std::string strip(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream stream(s);
  std::vector<std::string> out;
  std::string tok;
  while (stream >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("trailing junk in " + what);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

}  // namespace

BraidWord read_braid_word(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing braid word header");
  header = strip(header);
  if (header.rfind("n=", 0) != 0) throw ParseError("braid word header must be n=<strands>");
  const int strands = parse_int(header.substr(2), "strand count");

  std::string body;
  std::getline(in, body);  // may be absent: identity word
  std::vector<int> letters;
  for (const std::string& tok : tokens_of(body))
    letters.push_back(parse_int(tok, "braid letter"));
  return BraidWord(strands, std::move(letters));
}

BraidWord read_braid_word_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_braid_word(in);
}

std::string format_braid_word(const BraidWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands() << "\n";
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) out << ' ';
    out << w.letters()[i];
  }
  out << "\n";
  return out.str();
}

namespace {

// Token syntax: generator name, or name followed by ' for the inverse.
int parse_token(const Presentation& p, const std::string& tok) {
  std::string name = tok;
  bool inverse = false;
  if (!name.empty() && name.back() == '\'') {
    inverse = true;
    name.pop_back();
  }
  const auto idx = p.generator_index(name);
  if (!idx) throw ParseError("unknown generator '" + name + "'");
  return inverse ? -*idx : *idx;
}

}  // namespace

Presentation read_presentation(std::istream& in) {
  std::string line;
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<std::vector<std::string>> relator_tokens;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw ParseError("repeated gens: line");
      gens = tokens_of(line.substr(5));
      have_gens = true;
    } else if (line.rfind("rel:", 0) == 0) {
      relator_tokens.push_back(tokens_of(line.substr(4)));
    } else {
      throw ParseError("unexpected line '" + line + "'");
    }
  }
  if (!have_gens) throw ParseError("missing gens: line");

  Presentation shell(gens, {});
  std::vector<FreeWord> relators;
  for (const auto& toks : relator_tokens) {
    FreeWord w;
    for (const std::string& tok : toks) w.push_back(parse_token(shell, tok));
    relators.push_back(std::move(w));
  }
  return Presentation(std::move(gens), std::move(relators));
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_presentation(in);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const std::string& g : p.generators()) out << ' ' << g;
  out << "\n";
  for (const FreeWord& r : p.relators()) {
    out << "rel:";
    for (int e : r) {
      out << ' ' << p.generators()[std::abs(e) - 1];
      if (e < 0) out << '\'';
    }
    out << "\n";
  }
  return out.str();
}

FreeWord parse_free_word(const Presentation& p, const std::string& text) {
  FreeWord w;
  for (const std::string& tok : tokens_of(text)) w.push_back(parse_token(p, tok));
  return w;
}

StrandPaths read_strand_paths(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing trajectory header");
  header = strip(header);
  if (header.rfind("k=", 0) != 0) throw ParseError("trajectory header must be k=<strands>");
  const int k = parse_int(header.substr(2), "strand count");
  if (k < 1) throw ParseError("strand count must be >= 1");

  StrandPaths paths;
  paths.strand_count = k;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    const std::vector<std::string> toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != 1 + 2 * k)
      throw ParseError("trajectory row needs 1 + 2k numbers");
    std::vector<double> vals;
    for (const std::string& tok : toks) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw ParseError("bad number '" + tok + "'");
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad number '" + tok + "'");
      }
    }
    paths.times.push_back(vals[0]);
    std::vector<std::complex<double>> config(k);
    for (int j = 0; j < k; ++j) config[j] = {vals[1 + 2 * j], vals[2 + 2 * j]};
    paths.positions.push_back(std::move(config));
  }
  paths.validate();
  return paths;
}

StrandPaths read_strand_paths_file(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  return read_strand_paths(in);
}

std::string format_permutation(const Permutation& p) {
  std::ostringstream out;
  for (int j = 1; j <= p.size(); ++j) {
    if (j > 1) out << ' ';
    out << p.image(j);
  }
  return out.str();
}

std::string format_normal_form(const NormalForm& nf) {
  std::ostringstream out;
  out << "p=" << nf.delta_power << "; factors=";
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    if (i) out << ';';
    out << format_permutation(nf.factors[i].permutation());
  }
  return out.str();
}

}  // namespace braidforge
