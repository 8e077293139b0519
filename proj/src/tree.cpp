#include "deutsch/tree.hpp"

#include <sstream>

#include <json.hpp>

namespace deutsch {

namespace {

char mark_char(EdgeMark m) { return m == EdgeMark::Single ? 's' : 'd'; }

std::string marks_string(const MarkSequence& marks) {
  std::string out;
  for (const auto m : marks) out += mark_char(m);
  return out;
}

nlohmann::json marks_json(const MarkSequence& marks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto m : marks) arr.push_back(std::string(1, mark_char(m)));
  return arr;
}

MarkSequence marks_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("mark sequence must be an array");
  MarkSequence out;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("mark must be \"s\" or \"d\"");
    const auto& s = e.get_ref<const std::string&>();
    if (s == "s") {
      out.push_back(EdgeMark::Single);
    } else if (s == "d") {
      out.push_back(EdgeMark::Double);
    } else {
      throw std::invalid_argument("mark must be \"s\" or \"d\", got \"" + s + "\"");
    }
  }
  return out;
}

std::string invalid_tree_message(const std::vector<TreeError>& errors) {
  std::string msg = "invalid tree:";
  for (const auto& e : errors) msg += " " + e.message() + ";";
  return msg;
}

}  // namespace

std::string TreeError::message() const {
  switch (kind) {
    case Kind::BackboneEndsWithSingle:
      return "last backbone mark must be Double (mark " + std::to_string(mark_index) + ")";
    case Kind::BundleCountMismatch:
      return "bundle count must equal backbone length";
    case Kind::EmptyHangingPath:
      return "hanging paths must be nonempty (node " + std::to_string(node) + ", path " +
             std::to_string(path_index) + ")";
    case Kind::HangingPathEndsWithSingle:
      return "last mark of a hanging path must be Double (node " + std::to_string(node) +
             ", path " + std::to_string(path_index) + ", mark " +
             std::to_string(mark_index) + ")";
  }
  return "invalid tree";
}

InvalidTree::InvalidTree(std::vector<TreeError> errors)
    : std::invalid_argument(invalid_tree_message(errors)), errors_(std::move(errors)) {}

MarkSequence composition_to_marks(const Composition& parts) {
  MarkSequence out;
  for (const auto d : parts) {
    if (d == 0) throw std::invalid_argument("composition parts must be >= 1");
    out.insert(out.end(), d - 1, EdgeMark::Single);
    out.push_back(EdgeMark::Double);
  }
  return out;
}

Composition marks_to_composition(const MarkSequence& marks) {
  if (!marks.empty() && marks.back() == EdgeMark::Single) {
    throw DanglingSingles("mark sequence '" + marks_string(marks) +
                          "' ends with a Single edge");
  }
  Composition out;
  std::uint32_t block = 0;
  for (const auto m : marks) {
    ++block;
    if (m == EdgeMark::Double) {
      out.push_back(block);
      block = 0;
    }
  }
  return out;
}

MarkedTree path_to_tree(const ValidatedPath& path) {
  const Decomposition dec = decompose(path);
  MarkedTree tree;
  tree.backbone = composition_to_marks(dec.homerun);
  tree.bundles.reserve(dec.bundles.size());
  for (const auto& bundle : dec.bundles) {
    auto& hanging = tree.bundles.emplace_back();
    for (const auto& m : bundle) hanging.push_back(composition_to_marks(m.descent));
  }
  return tree;
}

std::vector<TreeError> validate_tree(const MarkedTree& tree) {
  using Kind = TreeError::Kind;
  std::vector<TreeError> errors;
  if (!tree.backbone.empty() && tree.backbone.back() == EdgeMark::Single) {
    errors.push_back({Kind::BackboneEndsWithSingle, -1, -1,
                      static_cast<long long>(tree.backbone.size()) - 1});
  }
  if (tree.bundles.size() != tree.backbone.size()) {
    errors.push_back({Kind::BundleCountMismatch});
  }
  for (std::size_t node = 0; node < tree.bundles.size(); ++node) {
    const auto& bundle = tree.bundles[node];
    for (std::size_t p = 0; p < bundle.size(); ++p) {
      const auto& marks = bundle[p];
      const auto ln = static_cast<long long>(node);
      const auto lp = static_cast<long long>(p);
      if (marks.empty()) {
        errors.push_back({Kind::EmptyHangingPath, ln, lp, -1});
      } else if (marks.back() == EdgeMark::Single) {
        errors.push_back({Kind::HangingPathEndsWithSingle, ln, lp,
                          static_cast<long long>(marks.size()) - 1});
      }
    }
  }
  return errors;
}

ValidatedPath tree_to_path(const MarkedTree& tree) {
  if (auto errors = validate_tree(tree); !errors.empty()) {
    throw InvalidTree(std::move(errors));
  }
  Decomposition dec;
  dec.height = static_cast<std::uint32_t>(tree.backbone.size());
  dec.homerun = marks_to_composition(tree.backbone);
  dec.bundles.reserve(tree.bundles.size());
  for (const auto& bundle : tree.bundles) {
    auto& mountains = dec.bundles.emplace_back();
    for (const auto& marks : bundle) {
      mountains.push_back(Mountain{static_cast<std::uint32_t>(marks.size()),
                                   marks_to_composition(marks)});
    }
  }
  return compose(dec);
}

TreeStats tree_statistics(const MarkedTree& tree) {
  TreeStats s;
  const auto count = [&](const MarkSequence& marks) {
    s.edge_count += marks.size();
    for (const auto m : marks) {
      if (m == EdgeMark::Double) ++s.double_count;
    }
  };
  count(tree.backbone);
  for (const auto& bundle : tree.bundles) {
    for (const auto& marks : bundle) count(marks);
  }
  s.weight = s.edge_count + s.double_count;
  return s;
}

std::string tree_to_json(const MarkedTree& tree) {
  nlohmann::json bundles = nlohmann::json::array();
  for (const auto& bundle : tree.bundles) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& marks : bundle) b.push_back(marks_json(marks));
    bundles.push_back(std::move(b));
  }
  nlohmann::json j;
  j["backbone"] = marks_json(tree.backbone);
  j["bundles"] = std::move(bundles);
  return j.dump();
}

MarkedTree tree_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed tree JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("backbone") || !j.contains("bundles")) {
    throw std::invalid_argument("tree JSON needs \"backbone\" and \"bundles\"");
  }
  MarkedTree tree;
  tree.backbone = marks_from_json(j.at("backbone"));
  const auto& bundles = j.at("bundles");
  if (!bundles.is_array()) throw std::invalid_argument("\"bundles\" must be an array");
  for (const auto& b : bundles) {
    if (!b.is_array()) throw std::invalid_argument("each bundle must be an array");
    auto& hanging = tree.bundles.emplace_back();
    for (const auto& marks : b) hanging.push_back(marks_from_json(marks));
  }
  return tree;
}

namespace {

std::size_t marks_weight(const MarkSequence& marks) {
  std::size_t w = 0;
  for (const auto m : marks) w += m == EdgeMark::Single ? 1 : 2;
  return w;
}

// Mark sequences of the given weight whose last mark is Double.
void for_each_terminated_marks(std::size_t weight, MarkSequence& cur,
                               const std::function<void(const MarkSequence&)>& visit) {
  if (weight == 2) {
    cur.push_back(EdgeMark::Double);
    visit(cur);
    cur.pop_back();
  }
  if (weight >= 3) {
    cur.push_back(EdgeMark::Single);
    for_each_terminated_marks(weight - 1, cur, visit);
    cur.pop_back();
  }
  if (weight >= 4) {
    cur.push_back(EdgeMark::Double);
    for_each_terminated_marks(weight - 2, cur, visit);
    cur.pop_back();
  }
}

// Ordered lists of hanging paths with total weight `weight`.
void for_each_hanging_list(std::size_t weight, std::vector<MarkSequence>& cur,
                           const std::function<void(const std::vector<MarkSequence>&)>& visit) {
  if (weight == 0) {
    visit(cur);
    return;
  }
  for (std::size_t first = 2; first <= weight; ++first) {
    MarkSequence marks;
    for_each_terminated_marks(first, marks, [&](const MarkSequence& m) {
      cur.push_back(m);
      for_each_hanging_list(weight - first, cur, visit);
      cur.pop_back();
    });
  }
}

void fill_bundles(MarkedTree& tree, std::size_t node, std::size_t budget,
                  const std::function<void(const MarkedTree&)>& visit) {
  if (node == tree.bundles.size()) {
    if (budget == 0) visit(tree);
    return;
  }
  for (std::size_t w = 0; w <= budget; ++w) {
    std::vector<MarkSequence> cur;
    for_each_hanging_list(w, cur, [&](const std::vector<MarkSequence>& list) {
      tree.bundles[node] = list;
      fill_bundles(tree, node + 1, budget - w, visit);
    });
  }
  tree.bundles[node].clear();
}

}  // namespace

void for_each_tree(std::size_t weight, const std::function<void(const MarkedTree&)>& visit) {
  if (weight == 0) {
    visit(MarkedTree{});
    return;
  }
  for (std::size_t h = 1; h + 1 <= weight; ++h) {
    // Backbones of length h: free marks on the first h - 1 edges, Double last.
    for (std::size_t bits = 0; bits < (std::size_t{1} << (h - 1)); ++bits) {
      MarkedTree tree;
      for (std::size_t i = 0; i + 1 < h; ++i) {
        tree.backbone.push_back((bits >> (h - 2 - i)) & 1u ? EdgeMark::Double
                                                          : EdgeMark::Single);
      }
      tree.backbone.push_back(EdgeMark::Double);
      const std::size_t wb = marks_weight(tree.backbone);
      if (wb > weight) continue;
      tree.bundles.resize(h);
      fill_bundles(tree, 0, weight - wb, visit);
    }
  }
}

std::string render_outline(const MarkedTree& tree) {
  std::ostringstream out;
  out << "root\n";
  for (std::size_t i = 0; i < tree.backbone.size(); ++i) {
    const std::string indent(2 * i, ' ');
    if (i < tree.bundles.size()) {
      for (const auto& marks : tree.bundles[i]) {
        out << indent << "  +- hang " << marks_string(marks) << '\n';
      }
    }
    out << indent << "  |  " << mark_char(tree.backbone[i]) << '\n';
    out << indent << "  node " << (i + 1) << '\n';
  }
  return out.str();
}

}  // namespace deutsch
