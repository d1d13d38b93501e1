#include "dtc/complex.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dtc {

namespace {

void check_label(const std::string& label, bool allow_pair_labels) {
  if (label.empty()) throw InvalidInput("empty vertex label");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
      throw InvalidInput("invalid character in vertex label '" + label + "'");
    if (c == '|' && !allow_pair_labels)
      throw InvalidInput("'|' is reserved for product labels: '" + label + "'");
  }
}

// Drops duplicates and members contained in another member.
std::vector<Simplex> maximal_members(std::vector<Simplex> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() > b.size(); });
  std::vector<Simplex> kept;
  for (const auto& s : sets) {
    bool absorbed = std::any_of(kept.begin(), kept.end(),
                                [&](const Simplex& k) { return s.is_subset_of(k); });
    if (!absorbed) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Complex Complex::from_labels(const std::vector<std::vector<std::string>>& facets,
                             bool allow_pair_labels) {
  if (facets.empty()) throw InvalidInput("empty complex is not supported");
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Simplex> simplices;
  for (const auto& facet : facets) {
    if (facet.empty()) throw InvalidInput("empty facet");
    Simplex s;
    for (const auto& label : facet) {
      check_label(label, allow_pair_labels);
      auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(labels.size()));
      if (inserted) {
        if (labels.size() >= kMaxVertices)
          throw InvalidInput("too many vertices (limit " + std::to_string(kMaxVertices) + ")");
        labels.push_back(label);
      }
      s.insert(it->second);
    }
    simplices.push_back(s);
  }
  return from_ids(std::move(labels), std::move(simplices));
}

Complex Complex::from_ids(std::vector<std::string> labels, std::vector<Simplex> facets) {
  if (facets.empty()) throw InvalidInput("empty complex is not supported");
  if (labels.size() > kMaxVertices)
    throw InvalidInput("too many vertices (limit " + std::to_string(kMaxVertices) + ")");
  Simplex used;
  const Simplex all = BitSet::range(labels.size());
  for (const auto& f : facets) {
    if (f.empty()) throw InvalidInput("empty facet");
    if (!f.is_subset_of(all)) throw InvalidInput("facet references an unknown vertex id");
    used |= f;
  }
  if (used != all) throw InvalidInput("vertex without a facet");

  Complex k;
  k.labels_ = std::move(labels);
  k.facets_ = maximal_members(std::move(facets));
  k.index();
  return k;
}

void Complex::index() {
  star_.assign(labels_.size(), {});
  for (std::uint32_t i = 0; i < facets_.size(); ++i)
    facets_[i].for_each([&](std::size_t v) { star_[v].push_back(i); });
  by_label_.clear();
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!by_label_.emplace(labels_[v], static_cast<VertexId>(v)).second)
      throw InvalidInput("duplicate vertex label '" + labels_[v] + "'");
  }
}

std::optional<VertexId> Complex::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

VertexId Complex::id_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw InvalidInput("unknown vertex '" + std::string(label) + "'");
  return *v;
}

Simplex Complex::simplex_of(const std::vector<std::string>& labels) const {
  if (labels.empty()) throw InvalidInput("empty simplex");
  Simplex s;
  for (const auto& l : labels) s.insert(id_of(l));
  return s;
}

std::vector<std::string> Complex::labels_of(const Simplex& s) const {
  std::vector<std::string> out;
  s.for_each([&](std::size_t v) { out.push_back(labels_[v]); });
  std::sort(out.begin(), out.end());
  return out;
}

bool Complex::is_simplex(const Simplex& s) const {
  if (s.empty()) return false;
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return s.is_subset_of(f); });
}

std::optional<std::size_t> Complex::facet_index(const Simplex& s) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), s);
  if (it != facets_.end() && *it == s) return static_cast<std::size_t>(it - facets_.begin());
  return std::nullopt;
}

std::vector<std::uint32_t> Complex::components() const {
  const std::size_t n = labels_.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Vertices of a facet are pairwise joined by edges.
  for (const auto& f : facets_) {
    auto first = static_cast<std::uint32_t>(f.first());
    f.for_each([&](std::size_t v) {
      auto a = root(first), b = root(static_cast<std::uint32_t>(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    });
  }
  std::vector<std::uint32_t> comp(n);
  std::unordered_map<std::uint32_t, std::uint32_t> numbering;
  for (std::uint32_t v = 0; v < n; ++v) {
    auto [it, _] = numbering.try_emplace(root(v), static_cast<std::uint32_t>(numbering.size()));
    comp[v] = it->second;
  }
  return comp;
}

bool Complex::is_edge_path_connected() const {
  auto comp = components();
  return std::all_of(comp.begin(), comp.end(), [](std::uint32_t c) { return c == 0; });
}

Complex Complex::subcomplex(std::span<const Simplex> simplices) const {
  if (simplices.empty()) throw InvalidInput("empty subcomplex");
  Simplex used;
  for (const auto& s : simplices) {
    if (!is_simplex(s)) throw InvalidInput("not a simplex of the ambient complex");
    used |= s;
  }
  std::vector<VertexId> relabel(labels_.size(), 0);
  std::vector<std::string> labels;
  used.for_each([&](std::size_t v) {
    relabel[v] = static_cast<VertexId>(labels.size());
    labels.push_back(labels_[v]);
  });
  std::vector<Simplex> facets;
  for (const auto& s : simplices) {
    Simplex t;
    s.for_each([&](std::size_t v) { t.insert(relabel[v]); });
    facets.push_back(t);
  }
  return from_ids(std::move(labels), std::move(facets));
}

Complex Complex::subcomplex_by_facets(const BitSet& facet_subset) const {
  std::vector<Simplex> chosen;
  facet_subset.for_each([&](std::size_t i) {
    if (i >= facets_.size()) throw InvalidInput("facet index out of range");
    chosen.push_back(facets_[i]);
  });
  return subcomplex(chosen);
}

std::vector<Simplex> Complex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& f : facets_) {
    auto verts = f.elements();
    const std::size_t m = verts.size();
    if (m > 24) throw InvalidInput("facet too large to enumerate faces");
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1u) s.insert(verts[j]);
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::string>> Complex::canonical_facets() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(labels_of(f));
  std::sort(out.begin(), out.end());
  return out;
}

// --- text / JSON -----------------------------------------------------------

Complex parse_complex_text(std::string_view text, bool allow_pair_labels) {
  std::vector<std::vector<std::string>> facets;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::vector<std::string> facet;
    for (std::string w; words >> w;) facet.push_back(w);
    if (facet.empty()) continue;
    try {
      for (const auto& w : facet) check_label(w, allow_pair_labels);
    } catch (const InvalidInput& e) {
      throw ParseError(lineno, e.what());
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError(lineno == 0 ? 1 : lineno, "no facets");
  return Complex::from_labels(facets, allow_pair_labels);
}

Complex parse_complex_json(std::string_view text, bool allow_pair_labels) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    throw ParseError(1, "expected {\"facets\": [[...], ...]}");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw ParseError(1, "facet must be an array of labels");
    std::vector<std::string> facet;
    for (const auto& v : f) {
      if (v.is_string())
        facet.push_back(v.get<std::string>());
      else if (v.is_number_integer())
        facet.push_back(std::to_string(v.get<long long>()));
      else
        throw ParseError(1, "vertex label must be a string or integer");
    }
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw ParseError(1, "no facets");
  return Complex::from_labels(facets, allow_pair_labels);
}

Complex parse_complex(std::string_view text, bool allow_pair_labels) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos) throw ParseError(1, "empty input");
  if (text[pos] == '{') return parse_complex_json(text, allow_pair_labels);
  return parse_complex_text(text, allow_pair_labels);
}

Complex load_complex(const std::string& path, bool allow_pair_labels) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), allow_pair_labels);
}

std::string serialize_complex(const Complex& k) {
  std::string out;
  for (const auto& facet : k.canonical_facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i) out += ' ';
      out += facet[i];
    }
    out += '\n';
  }
  return out;
}

std::string serialize_complex_json(const Complex& k) {
  nlohmann::json doc;
  doc["facets"] = k.canonical_facets();
  return doc.dump();
}

}  // namespace dtc
