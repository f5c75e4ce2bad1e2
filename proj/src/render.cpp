#include "gauss/render.hpp"

#include <sstream>
#include <vector>

namespace gauss {

std::string render_ascii(const GaussDiagram& d) {
  if (d.empty()) return "(unknot)\n";
  std::map<int, int> relabel;
  std::vector<std::string> tokens;
  std::vector<int> col;
  int width = 0;
  for (const auto& e : d.endpoints) {
    auto [it, fresh] = relabel.emplace(e.chord, static_cast<int>(relabel.size()) + 1);
    std::string tok;
    tok += role_char(e.role);
    tok += std::to_string(it->second);
    tok += sign_char(d.sign_of(e.chord));
    col.push_back(width);
    width += static_cast<int>(tok.size()) + 1;
    tokens.push_back(std::move(tok));
  }
  std::ostringstream os;
  for (const auto& t : tokens) os << t << ' ';
  os << '\n';
  for (const auto& [chord, label] : relabel) {
    int t = d.find(chord, Role::Tail), h = d.find(chord, Role::Head);
    std::string line(width, ' ');
    auto mark = [&](int lo, int hi) {
      for (int i = col[lo]; i < col[hi]; ++i) line[i] = '-';
    };
    if (t < h) {
      mark(t, h);
    } else {  // wraps past the basepoint
      for (int i = col[t]; i < width; ++i) line[i] = '-';
      for (int i = 0; i < col[h]; ++i) line[i] = '-';
    }
    line[col[t]] = 'o';
    line[col[h]] = '>';
    os << line << "  " << label << sign_char(d.sign_of(chord)) << '\n';
  }
  return os.str();
}

std::string render_dot(const GaussDiagram& d) {
  std::map<int, int> relabel;
  for (const auto& e : d.endpoints)
    relabel.emplace(e.chord, static_cast<int>(relabel.size()) + 1);
  std::ostringstream os;
  os << "graph interleavement {\n";
  for (const auto& [chord, label] : relabel)
    os << "  c" << label << " [label=\"" << label << sign_char(d.sign_of(chord))
       << "\"];\n";
  for (auto i = relabel.begin(); i != relabel.end(); ++i)
    for (auto j = std::next(i); j != relabel.end(); ++j)
      if (interleaved(d, i->first, j->first))
        os << "  c" << i->second << " -- c" << j->second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gauss
