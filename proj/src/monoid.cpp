#include "monodec/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "json.hpp"
#include "monodec/error.hpp"

namespace monodec {

FiniteMonoid::FiniteMonoid() : FiniteMonoid(1, {0}) {}

FiniteMonoid::FiniteMonoid(std::size_t order, std::vector<std::uint32_t> table,
                           std::vector<Generator> generators,
                           std::vector<std::string> names, Check check)
    : order_(order), generators_(std::move(generators)), names_(std::move(names)) {
  if (order == 0) throw Error(ErrorKind::InvalidArgument, "monoid order must be positive");
  if (table.size() != order * order)
    throw Error(ErrorKind::InvalidArgument, "multiplication table has wrong size");
  for (auto v : table)
    if (v >= order) throw Error(ErrorKind::InvalidArgument, "table entry out of range");
  if (!names_.empty() && names_.size() != order)
    throw Error(ErrorKind::InvalidArgument, "names must cover every element");
  for (const auto& g : generators_)
    if (g.element >= order) throw Error(ErrorKind::InvalidArgument, "generator out of range");
  table_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));

  for (Element x = 0; x < order; ++x)
    if (multiply(0, x) != x || multiply(x, 0) != x)
      throw Error(ErrorKind::InvalidArgument, "element 0 is not the identity");

  if (check == Check::Always || order <= kAssociativityCheckLimit) {
    for (Element i = 0; i < order; ++i)
      for (Element j = 0; j < order; ++j) {
        Element ij = multiply(i, j);
        for (Element k = 0; k < order; ++k)
          if (multiply(ij, k) != multiply(i, multiply(j, k)))
            throw Error(ErrorKind::InvalidArgument, "table is not associative");
      }
  }

  if (!generators_.empty()) {
    std::vector<bool> seen(order, false);
    std::vector<Element> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        Element y = multiply(x, g.element);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
      throw Error(ErrorKind::InvalidArgument, "generators do not generate the monoid");
  }
}

std::string FiniteMonoid::name(Element x) const {
  if (x < names_.size()) return names_[x];
  return std::to_string(x);
}

bool FiniteMonoid::is_commutative() const {
  for (Element i = 0; i < order_; ++i)
    for (Element j = i + 1; j < order_; ++j)
      if (multiply(i, j) != multiply(j, i)) return false;
  return true;
}

Transformation::Transformation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  for (auto v : image_)
    if (v >= image_.size())
      throw Error(ErrorKind::InvalidArgument, "transformation image out of range");
}

Transformation Transformation::identity(std::size_t degree) {
  std::vector<std::uint32_t> image(degree);
  std::iota(image.begin(), image.end(), 0u);
  return Transformation(std::move(image));
}

Transformation Transformation::then(const Transformation& next) const {
  std::vector<std::uint32_t> image(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) image[k] = next.image_[image_[k]];
  Transformation out;
  out.image_ = std::move(image);
  return out;
}

bool Transformation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != k) return false;
  return true;
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(image_[k]);
  }
  return out + "]";
}

Element SyntacticMonoid::image_of(std::span<const Letter> word) const {
  Element x = FiniteMonoid::identity();
  for (Letter a : word) x = monoid.multiply(x, eta.at(a));
  return x;
}

SyntacticMonoid transition_monoid(const Dfa& dfa, std::size_t cap) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.alphabet_size();
  using Image = std::vector<std::uint32_t>;

  std::vector<Transformation> letters;
  for (Letter a = 0; a < k; ++a) {
    Image img(n);
    for (State q = 0; q < n; ++q) img[q] = static_cast<std::uint32_t>(dfa.next(q, a));
    letters.emplace_back(std::move(img));
  }

  std::unordered_map<Image, Element, boost::hash<Image>> index;
  std::vector<Transformation> elements{Transformation::identity(n)};
  std::vector<Element> parent{0};
  std::vector<Letter> via{0};
  index.emplace(elements[0].image(), 0);
  // right[x * k + a] = x . eta(a)
  std::vector<Element> right;
  for (Element x = 0; x < elements.size(); ++x) {
    for (Letter a = 0; a < k; ++a) {
      Transformation y = elements[x].then(letters[a]);
      auto [it, inserted] = index.emplace(y.image(), elements.size());
      if (inserted) {
        if (elements.size() >= cap)
          throw Error(ErrorKind::MonoidTooLarge,
                      "transition monoid exceeds " + std::to_string(cap) + " elements");
        elements.push_back(std::move(y));
        parent.push_back(x);
        via.push_back(a);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t order = elements.size();
  std::vector<LetterWord> reps(order);
  for (Element x = 1; x < order; ++x) {
    reps[x] = reps[parent[x]];
    reps[x].push_back(via[x]);
  }

  // x . y follows the representative word of y from x; BFS order makes the
  // parent's column available first.
  std::vector<std::uint32_t> table(order * order);
  for (Element x = 0; x < order; ++x) table[x * order] = static_cast<std::uint32_t>(x);
  for (Element y = 1; y < order; ++y)
    for (Element x = 0; x < order; ++x)
      table[x * order + y] =
          static_cast<std::uint32_t>(right[table[x * order + parent[y]] * k + via[y]]);

  std::vector<Generator> gens;
  std::vector<Element> eta;
  for (Letter a = 0; a < k; ++a) {
    eta.push_back(right[a]);
    gens.push_back({dfa.alphabet()[a], right[a]});
  }
  std::vector<std::string> names;
  names.reserve(order);
  names.emplace_back("e");
  for (Element x = 1; x < order; ++x) names.push_back(dfa.decode(reps[x]));

  std::vector<bool> accepting(order);
  for (Element x = 0; x < order; ++x) accepting[x] = dfa.is_accepting(elements[x](dfa.initial()));

  FiniteMonoid monoid(order, std::move(table), std::move(gens), std::move(names),
                      FiniteMonoid::Check::Closure);
  return SyntacticMonoid{std::move(monoid), dfa.alphabet(), std::move(eta), std::move(accepting),
                         std::move(elements), std::move(reps)};
}

CayleyGraph cayley_graph(const SyntacticMonoid& m) {
  if (m.eta.empty()) throw Error(ErrorKind::InvalidArgument, "monoid has no generators");
  CayleyGraph g;
  g.vertices = m.order();
  g.symbols = m.symbols;
  for (Element x = 0; x < m.order(); ++x)
    for (Letter a = 0; a < m.eta.size(); ++a)
      g.edges.push_back({x, a, m.monoid.multiply(x, m.eta[a])});
  return g;
}

std::string to_dot(const CayleyGraph& g, const std::vector<std::string>& names) {
  auto label = [&](Element v) { return v < names.size() ? names[v] : std::to_string(v); };
  std::ostringstream out;
  out << "digraph cayley {\n";
  for (Element v = 0; v < g.vertices; ++v)
    out << "  n" << v << " [label=\"" << label(v) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << g.symbols[e.letter] << "\"];\n";
  out << "}\n";
  return out.str();
}

std::optional<Element> find_zero(const FiniteMonoid& m) {
  for (Element z = 0; z < m.order(); ++z) {
    bool zero = true;
    for (Element s = 0; s < m.order() && zero; ++s)
      zero = m.multiply(z, s) == z && m.multiply(s, z) == z;
    if (zero) return z;
  }
  return std::nullopt;
}

std::vector<Element> principal_ideal(const FiniteMonoid& m, Element x) {
  std::vector<bool> left(m.order(), false), both(m.order(), false);
  for (Element s = 0; s < m.order(); ++s) left[m.multiply(s, x)] = true;
  for (Element sx = 0; sx < m.order(); ++sx)
    if (left[sx])
      for (Element t = 0; t < m.order(); ++t) both[m.multiply(sx, t)] = true;
  std::vector<Element> out;
  for (Element y = 0; y < m.order(); ++y)
    if (both[y]) out.push_back(y);
  return out;
}

bool is_ideal(const FiniteMonoid& m, std::span<const Element> candidate) {
  if (candidate.empty()) return false;
  std::vector<bool> in(m.order(), false);
  for (Element x : candidate) {
    if (x >= m.order()) return false;
    in[x] = true;
  }
  for (Element x : candidate)
    for (Element s = 0; s < m.order(); ++s)
      if (!in[m.multiply(s, x)] || !in[m.multiply(x, s)]) return false;
  return true;
}

FiniteMonoid rees_factor(const FiniteMonoid& m, std::span<const Element> ideal) {
  if (!is_ideal(m, ideal)) throw Error(ErrorKind::NotAnIdeal, "subset is not an ideal");
  std::vector<bool> in(m.order(), false);
  for (Element x : ideal) in[x] = true;

  std::vector<Element> kept;
  std::vector<Element> index(m.order(), 0);
  for (Element x = 0; x < m.order(); ++x)
    if (!in[x]) {
      index[x] = kept.size();
      kept.push_back(x);
    }
  const Element zero = kept.size();
  const std::size_t order = kept.size() + 1;
  std::vector<std::uint32_t> table(order * order, static_cast<std::uint32_t>(zero));
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      Element p = m.multiply(kept[i], kept[j]);
      if (!in[p]) table[i * order + j] = static_cast<std::uint32_t>(index[p]);
    }
  std::vector<std::string> names;
  for (Element x : kept) names.push_back(m.name(x));
  names.emplace_back("iota");
  return FiniteMonoid(order, std::move(table), {}, std::move(names));
}

FiniteMonoid semidirect_product(const FiniteMonoid& m, const FiniteMonoid& n,
                                std::span<const std::uint32_t> action) {
  const std::size_t om = m.order(), on = n.order();
  if (action.size() != om * on)
    throw Error(ErrorKind::InvalidArgument, "action table has wrong size");
  auto act = [&](Element y, Element x) -> Element { return action[y * om + x]; };
  for (Element x = 0; x < om; ++x) {
    if (act(0, x) != x) throw Error(ErrorKind::NotAnAction, "identity does not act trivially");
    for (Element y1 = 0; y1 < on; ++y1)
      for (Element y2 = 0; y2 < on; ++y2)
        if (act(y1, act(y2, x)) != act(n.multiply(y1, y2), x))
          throw Error(ErrorKind::NotAnAction, "action is not compatible with the product of N");
  }
  for (Element y = 0; y < on; ++y)
    for (Element x1 = 0; x1 < om; ++x1)
      for (Element x2 = 0; x2 < om; ++x2)
        if (act(y, m.multiply(x1, x2)) != m.multiply(act(y, x1), act(y, x2)))
          throw Error(ErrorKind::NotDistributive, "action does not distribute over M");

  const std::size_t order = om * on;
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::string> names(order);
  for (Element y1 = 0; y1 < on; ++y1)
    for (Element x1 = 0; x1 < om; ++x1) {
      Element p = pair_index(m, x1, y1);
      names[p] = "(" + m.name(x1) + "," + n.name(y1) + ")";
      for (Element y2 = 0; y2 < on; ++y2)
        for (Element x2 = 0; x2 < om; ++x2)
          table[p * order + pair_index(m, x2, y2)] = static_cast<std::uint32_t>(
              pair_index(m, m.multiply(x1, act(y1, x2)), n.multiply(y1, y2)));
    }
  return FiniteMonoid(order, std::move(table), {}, std::move(names),
                      FiniteMonoid::Check::Closure);
}

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
  std::vector<std::uint32_t> trivial(m.order() * n.order());
  for (Element y = 0; y < n.order(); ++y)
    for (Element x = 0; x < m.order(); ++x) trivial[y * m.order() + x] = static_cast<std::uint32_t>(x);
  return semidirect_product(m, n, trivial);
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

std::vector<Element> digits(Element code, std::size_t base, std::size_t count) {
  std::vector<Element> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = code % base;
    code /= base;
  }
  return out;
}

Element undigits(const std::vector<Element>& d, std::size_t base) {
  Element code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * base + d[i];
  return code;
}

}  // namespace

FiniteMonoid power_monoid(const FiniteMonoid& m, const FiniteMonoid& n, std::size_t cap) {
  const std::size_t om = m.order(), on = n.order();
  const std::size_t order = checked_power(om, on, cap);
  if (order > cap) throw Error(ErrorKind::TooLarge, "function monoid exceeds the order cap");
  std::vector<std::uint32_t> table(order * order);
  for (Element f = 0; f < order; ++f) {
    auto fd = digits(f, om, on);
    for (Element g = 0; g < order; ++g) {
      auto gd = digits(g, om, on);
      std::vector<Element> h(on);
      for (std::size_t y = 0; y < on; ++y) h[y] = m.multiply(fd[y], gd[y]);
      table[f * order + g] = static_cast<std::uint32_t>(undigits(h, om));
    }
  }
  return FiniteMonoid(order, std::move(table), {}, {}, FiniteMonoid::Check::Closure);
}

std::vector<std::uint32_t> shift_action(const FiniteMonoid& m, const FiniteMonoid& n) {
  const std::size_t om = m.order(), on = n.order();
  const std::size_t size = checked_power(om, on, kDefaultMonoidCap);
  if (size > kDefaultMonoidCap) throw Error(ErrorKind::TooLarge, "function monoid exceeds the order cap");
  std::vector<std::uint32_t> action(on * size);
  for (Element y = 0; y < on; ++y)
    for (Element f = 0; f < size; ++f) {
      auto fd = digits(f, om, on);
      std::vector<Element> shifted(on);
      for (Element z = 0; z < on; ++z) shifted[z] = fd[n.multiply(z, y)];
      action[y * size + f] = static_cast<std::uint32_t>(undigits(shifted, om));
    }
  return action;
}

namespace {

FiniteMonoid transformation_monoid(std::vector<Transformation> elements,
                                   std::vector<std::string> names) {
  std::map<std::vector<std::uint32_t>, Element> index;
  for (Element i = 0; i < elements.size(); ++i) index.emplace(elements[i].image(), i);
  const std::size_t order = elements.size();
  std::vector<std::uint32_t> table(order * order);
  for (Element i = 0; i < order; ++i)
    for (Element j = 0; j < order; ++j)
      table[i * order + j] = static_cast<std::uint32_t>(index.at(elements[i].then(elements[j]).image()));
  return FiniteMonoid(order, std::move(table), {}, std::move(names), FiniteMonoid::Check::Closure);
}

}  // namespace

FiniteMonoid make_named(NamedKind kind, std::size_t k, std::size_t cap) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "K must be positive");
  switch (kind) {
    case NamedKind::Cyclic: {
      if (k > cap) throw Error(ErrorKind::TooLarge, "cyclic group exceeds the order cap");
      std::vector<std::uint32_t> table(k * k);
      std::vector<std::string> names;
      for (Element i = 0; i < k; ++i) {
        names.push_back(std::to_string(i));
        for (Element j = 0; j < k; ++j) table[i * k + j] = static_cast<std::uint32_t>((i + j) % k);
      }
      return FiniteMonoid(k, std::move(table), {}, std::move(names), FiniteMonoid::Check::Closure);
    }
    case NamedKind::RightZero:
    case NamedKind::LeftZero: {
      const std::size_t order = k + 1;
      if (order > cap) throw Error(ErrorKind::TooLarge, "monoid exceeds the order cap");
      std::vector<std::uint32_t> table(order * order);
      std::vector<std::string> names{"e"};
      for (Element i = 1; i < order; ++i) names.push_back("i" + std::to_string(i));
      for (Element i = 0; i < order; ++i)
        for (Element j = 0; j < order; ++j) {
          Element v;
          if (i == 0) v = j;
          else if (j == 0) v = i;
          else v = kind == NamedKind::RightZero ? j : i;
          table[i * order + j] = static_cast<std::uint32_t>(v);
        }
      return FiniteMonoid(order, std::move(table), {}, std::move(names), FiniteMonoid::Check::Closure);
    }
    case NamedKind::Symmetric: {
      if (k > 6) throw Error(ErrorKind::TooLarge, "symmetric groups are limited to K <= 6");
      std::vector<std::uint32_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0u);
      std::vector<Transformation> elements;
      std::vector<std::string> names;
      do {
        elements.emplace_back(perm);
        names.push_back(elements.back().to_string());
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (elements.size() > cap) throw Error(ErrorKind::TooLarge, "symmetric group exceeds the order cap");
      return transformation_monoid(std::move(elements), std::move(names));
    }
    case NamedKind::FullTransformation: {
      if (k > 6) throw Error(ErrorKind::TooLarge, "full transformation monoids are limited to K <= 6");
      const std::size_t order = checked_power(k, k, cap);
      if (order > cap) throw Error(ErrorKind::TooLarge, "full transformation monoid exceeds the order cap");
      std::vector<Transformation> elements{Transformation::identity(k)};
      for (Element code = 0; code < order; ++code) {
        // most significant digit first gives lexicographic order of images
        auto d = digits(code, k, k);
        std::reverse(d.begin(), d.end());
        Transformation t(std::vector<std::uint32_t>(d.begin(), d.end()));
        if (!t.is_identity()) elements.push_back(std::move(t));
      }
      std::vector<std::string> names;
      for (const auto& t : elements) names.push_back(t.to_string());
      return transformation_monoid(std::move(elements), std::move(names));
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown monoid kind");
}

bool hom_image_check(const FiniteMonoid& src, const FiniteMonoid& dst,
                     std::span<const Element> map) {
  if (map.size() != src.order()) return false;
  for (Element x : map)
    if (x >= dst.order()) return false;
  if (map[FiniteMonoid::identity()] != FiniteMonoid::identity()) return false;
  for (Element x = 0; x < src.order(); ++x)
    for (Element y = 0; y < src.order(); ++y)
      if (map[src.multiply(x, y)] != dst.multiply(map[x], map[y])) return false;
  return true;
}

std::string monoid_to_json(const SyntacticMonoid& m) {
  nlohmann::ordered_json doc;
  const std::size_t order = m.order();
  doc["order"] = order;
  doc["identity"] = FiniteMonoid::identity();
  auto rows = nlohmann::ordered_json::array();
  for (Element i = 0; i < order; ++i) {
    std::vector<std::uint32_t> row(m.monoid.table().begin() + i * order,
                                   m.monoid.table().begin() + (i + 1) * order);
    rows.push_back(row);
  }
  doc["table"] = rows;
  nlohmann::ordered_json gens = nlohmann::ordered_json::object();
  for (std::size_t a = 0; a < m.symbols.size(); ++a) gens[m.symbols[a]] = m.eta[a];
  doc["generators"] = gens;
  std::vector<Element> accepting;
  for (Element x = 0; x < order; ++x)
    if (m.accepting_image[x]) accepting.push_back(x);
  doc["accepting_image"] = accepting;
  return doc.dump();
}

}  // namespace monodec
