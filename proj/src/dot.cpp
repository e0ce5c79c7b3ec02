#include "lmkit/dot.hpp"

#include <sstream>

namespace lmkit {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

void emit_hasse(std::ostringstream& os, const Poset& p) {
  for (int x = 0; x < p.size(); ++x)
    os << "  n" << x << " [label=" << quoted(p.names[x]) << "];\n";
  for (auto [x, y] : cover_pairs(p)) os << "  n" << x << " -> n" << y << ";\n";
}

}  // namespace

std::string emit_dot(const LMnAlgebra& a) {
  std::ostringstream os;
  os << "digraph algebra {\n  rankdir=BT;\n";
  emit_hasse(os, a.lattice.poset);
  os << "}\n";
  return os.str();
}

std::string emit_dot(const LnPSpace& x) {
  std::ostringstream os;
  os << "digraph space {\n  rankdir=BT;\n";
  emit_hasse(os, x.poset);
  for (int i = 1; i <= x.n - 1; ++i) {
    for (int p = 0; p < x.size(); ++p) {
      os << "  n" << p << " -> n" << x.f(i, p) << " [style=dashed, label=\"f"
         << i << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string emit_dot(const CongruenceLattice& lattice, const LMnAlgebra& a) {
  std::ostringstream os;
  os << "digraph congruences {\n  rankdir=BT;\n";
  for (int k = 0; k < lattice.size(); ++k) {
    std::string label;
    for (const auto& cls : lattice.elements[k].classes()) {
      label += "{";
      for (std::size_t j = 0; j < cls.size(); ++j) {
        if (j) label += " ";
        label += a.name_of(cls[j]);
      }
      label += "}";
    }
    os << "  n" << k << " [label=" << quoted(label) << "];\n";
  }
  // covers of the refinement order
  for (int i = 0; i < lattice.size(); ++i) {
    for (int j = 0; j < lattice.size(); ++j) {
      if (i == j || !lattice.elements[i].refines(lattice.elements[j])) continue;
      bool covered = true;
      for (int k = 0; k < lattice.size() && covered; ++k) {
        if (k == i || k == j) continue;
        if (lattice.elements[i].refines(lattice.elements[k]) &&
            lattice.elements[k].refines(lattice.elements[j]))
          covered = false;
      }
      if (covered) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace lmkit
