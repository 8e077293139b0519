#include "deutsch/path.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include <json.hpp>

namespace deutsch {

struct PathAccess {
  static ValidatedPath trusted(DeutschPath p) { return ValidatedPath{std::move(p)}; }
};

Step Step::down(std::uint32_t size) {
  if (size == 0) {
    throw std::invalid_argument("down-step size must be >= 1");
  }
  return Step{size};
}

std::string PathError::message() const {
  switch (kind) {
    case Kind::NegativeExcursion:
      return "path goes below ground at step " + std::to_string(position);
    case Kind::NonzeroEnd:
      return "path ends at height " + std::to_string(final_height);
  }
  return "invalid path";
}

InvalidPath::InvalidPath(PathError e)
    : std::invalid_argument(e.message()), error_(e) {}

// ---------------------------------------------------------------------------

DeutschPath parse_path(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;

    if (tok == "U") {
      steps.push_back(Step::up());
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'D') {
      throw ParseError("malformed token '" + std::string(tok) + "'");
    }
    const std::string_view digits = tok.substr(1);
    if (!std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed token '" + std::string(tok) + "'");
    }
    if (digits == "0") {
      throw ParseError("down-size must be >= 1 in token '" + std::string(tok) + "'");
    }
    if (digits[0] == '0') {
      throw ParseError("leading zero in token '" + std::string(tok) + "'");
    }
    std::uint32_t size = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("down-size out of range in token '" + std::string(tok) + "'");
    }
    steps.push_back(Step::down(size));
  }
  return DeutschPath{std::move(steps)};
}

std::string render_step(Step s) {
  return s.is_up() ? std::string("U") : "D" + std::to_string(s.size());
}

std::string render_path(const DeutschPath& path) {
  std::string out;
  for (const Step s : path.steps()) {
    if (!out.empty()) out += ' ';
    out += render_step(s);
  }
  return out;
}

std::string path_to_json(const DeutschPath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step s : path.steps()) steps.push_back(render_step(s));
  return nlohmann::json{{"steps", steps}}.dump();
}

// ---------------------------------------------------------------------------

std::variant<ValidatedPath, PathError> validate(const DeutschPath& path) {
  long long h = 0;
  std::size_t pos = 0;
  for (const Step s : path.steps()) {
    ++pos;
    h += s.rise();
    if (h < 0) {
      return PathError{PathError::Kind::NegativeExcursion, pos, h};
    }
  }
  if (h != 0) {
    return PathError{PathError::Kind::NonzeroEnd, 0, h};
  }
  return PathAccess::trusted(path);
}

ValidatedPath require_valid(const DeutschPath& path) {
  auto r = validate(path);
  if (auto* e = std::get_if<PathError>(&r)) {
    throw InvalidPath(*e);
  }
  return std::get<ValidatedPath>(std::move(r));
}

std::vector<long long> heights(const DeutschPath& path) {
  std::vector<long long> hs;
  hs.reserve(path.length() + 1);
  long long h = 0;
  hs.push_back(h);
  for (const Step s : path.steps()) {
    h += s.rise();
    hs.push_back(h);
  }
  return hs;
}

std::vector<long long> valley_levels(const ValidatedPath& path) {
  const auto& st = path.steps();
  std::vector<long long> levels;
  long long h = 0;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    h += st[i].rise();
    if (st[i].is_down() && st[i + 1].is_up()) {
      levels.push_back(h);
    }
  }
  return levels;
}

bool is_nondecreasing(const ValidatedPath& path) {
  const auto v = valley_levels(path);
  return std::is_sorted(v.begin(), v.end());
}

// ---------------------------------------------------------------------------

bool Mountain::valid() const noexcept {
  if (ups == 0 || descent.empty()) return false;
  std::uint64_t sum = 0;
  for (const auto d : descent) {
    if (d == 0) return false;
    sum += d;
  }
  return sum == ups;
}

std::optional<Mountain> as_mountain(const ValidatedPath& path) {
  const auto& st = path.steps();
  std::size_t i = 0;
  while (i < st.size() && st[i].is_up()) ++i;
  if (i == 0 || i == st.size()) return std::nullopt;
  Mountain m;
  m.ups = static_cast<std::uint32_t>(i);
  for (; i < st.size(); ++i) {
    if (st[i].is_up()) return std::nullopt;
    m.descent.push_back(st[i].size());
  }
  // A validated path ends on the ground, so the descent already sums to ups.
  return m;
}

std::vector<Step> mountain_steps(const Mountain& m) {
  std::vector<Step> out(m.ups, Step::up());
  for (const auto d : m.descent) out.push_back(Step::down(d));
  return out;
}

bool Decomposition::valid() const noexcept {
  if (bundles.size() != height) return false;
  if (height == 0) return homerun.empty();
  std::uint64_t sum = 0;
  for (const auto part : homerun) {
    if (part == 0) return false;
    sum += part;
  }
  if (sum != height) return false;
  for (const auto& bundle : bundles) {
    for (const auto& m : bundle) {
      if (!m.valid()) return false;
    }
  }
  return true;
}

std::size_t Decomposition::length() const noexcept {
  std::size_t n = height + homerun.size();
  for (const auto& bundle : bundles) {
    for (const auto& m : bundle) n += m.length();
  }
  return n;
}

Decomposition decompose(const ValidatedPath& path) {
  if (!is_nondecreasing(path)) {
    throw NotNonDecreasing("path '" + render_path(path) + "' is not non-decreasing");
  }
  Decomposition dec;
  const auto& st = path.steps();
  if (st.empty()) return dec;

  // Home run: every step after the last up-step.
  std::size_t last_up = st.size();
  for (std::size_t i = st.size(); i-- > 0;) {
    if (st[i].is_up()) {
      last_up = i;
      break;
    }
  }
  for (std::size_t i = last_up + 1; i < st.size(); ++i) {
    dec.homerun.push_back(st[i].size());
  }

  const auto hs = heights(path.path());
  const auto h = static_cast<std::uint32_t>(hs[last_up + 1]);
  dec.height = h;
  dec.bundles.resize(h);

  // The backbone up-step leaving level l is the last time the prefix sits at l.
  std::vector<std::size_t> backbone(h, 0);
  for (std::size_t t = 0; t <= last_up; ++t) {
    if (hs[t] < static_cast<long long>(h)) backbone[static_cast<std::size_t>(hs[t])] = t;
  }

  std::size_t start = 0;
  for (std::uint32_t level = 0; level < h; ++level) {
    const std::size_t stop = backbone[level];
    // Split [start, stop) at each return to this level; every piece is a mountain.
    std::size_t piece = start;
    for (std::size_t t = start + 1; t <= stop; ++t) {
      if (hs[t] != static_cast<long long>(level)) continue;
      std::vector<Step> seg(st.begin() + static_cast<std::ptrdiff_t>(piece),
                            st.begin() + static_cast<std::ptrdiff_t>(t));
      auto m = as_mountain(PathAccess::trusted(DeutschPath{std::move(seg)}));
      if (!m) {
        throw NotNonDecreasing("bundle at level " + std::to_string(level) +
                               " contains a non-mountain excursion");
      }
      dec.bundles[level].push_back(std::move(*m));
      piece = t;
    }
    start = stop + 1;
  }
  if (compose(dec) != path) {
    throw NotNonDecreasing("path '" + render_path(path) + "' has no bundle decomposition");
  }
  return dec;
}

ValidatedPath compose(const Decomposition& dec) {
  if (!dec.valid()) {
    throw std::invalid_argument("decomposition violates its invariants");
  }
  std::vector<Step> steps;
  steps.reserve(dec.length());
  for (const auto& bundle : dec.bundles) {
    for (const auto& m : bundle) {
      const auto ms = mountain_steps(m);
      steps.insert(steps.end(), ms.begin(), ms.end());
    }
    steps.push_back(Step::up());
  }
  for (const auto part : dec.homerun) steps.push_back(Step::down(part));
  return PathAccess::trusted(DeutschPath{std::move(steps)});
}

// ---------------------------------------------------------------------------

namespace {

void deutsch_dfs(std::vector<Step>& prefix, long long h, std::size_t remaining,
                 const PathVisitor& visit) {
  if (remaining == 0) {
    if (h == 0) visit(PathAccess::trusted(DeutschPath{prefix}));
    return;
  }
  // Returning to ground needs at least one down-step when h > 0, and a full
  // up/down pair when h == 0.
  const auto feasible = [&](long long height, std::size_t left) {
    return height == 0 ? left != 1 : left >= 1;
  };
  if (feasible(h + 1, remaining - 1)) {
    prefix.push_back(Step::up());
    deutsch_dfs(prefix, h + 1, remaining - 1, visit);
    prefix.pop_back();
  }
  for (long long k = 1; k <= h; ++k) {
    if (!feasible(h - k, remaining - 1)) continue;
    prefix.push_back(Step::down(static_cast<std::uint32_t>(k)));
    deutsch_dfs(prefix, h - k, remaining - 1, visit);
    prefix.pop_back();
  }
}

void compositions_rec(std::uint32_t left, Composition& cur,
                      const std::function<void(const Composition&)>& visit) {
  if (left == 0) {
    visit(cur);
    return;
  }
  for (std::uint32_t part = 1; part <= left; ++part) {
    cur.push_back(part);
    compositions_rec(left - part, cur, visit);
    cur.pop_back();
  }
}

void compositions_with_parts(std::uint32_t total, std::uint32_t parts,
                             Composition& cur,
                             const std::function<void(const Composition&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(cur);
    return;
  }
  if (total < parts) return;
  for (std::uint32_t part = 1; part + (parts - 1) <= total; ++part) {
    cur.push_back(part);
    compositions_with_parts(total - part, parts - 1, cur, visit);
    cur.pop_back();
  }
}

// Mountains of exactly `length` steps: j ups and m downs, 1 <= m <= j.
void for_each_mountain(std::size_t length,
                       const std::function<void(const Mountain&)>& visit) {
  for (std::uint32_t m = 1; 2 * m <= length; ++m) {
    const auto j = static_cast<std::uint32_t>(length - m);
    Composition cur;
    compositions_with_parts(j, m, cur, [&](const Composition& c) {
      visit(Mountain{j, c});
    });
  }
}

// Sequences of mountains whose lengths add up to `length`.
void for_each_bundle(std::size_t length, std::vector<Mountain>& cur,
                     const std::function<void(const std::vector<Mountain>&)>& visit) {
  if (length == 0) {
    visit(cur);
    return;
  }
  for (std::size_t first = 2; first <= length; ++first) {
    if (length - first == 1) continue;
    for_each_mountain(first, [&](const Mountain& m) {
      cur.push_back(m);
      for_each_bundle(length - first, cur, visit);
      cur.pop_back();
    });
  }
}

void distribute_bundles(Decomposition& dec, std::uint32_t level, std::size_t budget,
                        const std::function<void(const Decomposition&)>& visit) {
  if (level == dec.height) {
    if (budget == 0) visit(dec);
    return;
  }
  for (std::size_t len = 0; len <= budget; ++len) {
    if (len == 1) continue;
    std::vector<Mountain> cur;
    for_each_bundle(len, cur, [&](const std::vector<Mountain>& bundle) {
      dec.bundles[level] = bundle;
      distribute_bundles(dec, level + 1, budget - len, visit);
    });
  }
  dec.bundles[level].clear();
}

}  // namespace

void for_each_composition(std::uint32_t total,
                          const std::function<void(const Composition&)>& visit) {
  Composition cur;
  compositions_rec(total, cur, visit);
}

void for_each_deutsch(std::size_t n, const PathVisitor& visit) {
  std::vector<Step> prefix;
  prefix.reserve(n);
  if (n == 0) {
    visit(ValidatedPath{});
    return;
  }
  if (n == 1) return;
  deutsch_dfs(prefix, 0, n, visit);
}

std::vector<ValidatedPath> enumerate_deutsch(std::size_t n) {
  std::vector<ValidatedPath> out;
  for_each_deutsch(n, [&](const ValidatedPath& p) { out.push_back(p); });
  return out;
}

void for_each_nondecreasing_filter(std::size_t n, const PathVisitor& visit) {
  for_each_deutsch(n, [&](const ValidatedPath& p) {
    if (is_nondecreasing(p)) visit(p);
  });
}

std::vector<ValidatedPath> enumerate_nondecreasing_filter(std::size_t n) {
  std::vector<ValidatedPath> out;
  for_each_nondecreasing_filter(n, [&](const ValidatedPath& p) { out.push_back(p); });
  return out;
}

void for_each_decomposition(std::size_t n,
                            const std::function<void(const Decomposition&)>& visit) {
  if (n == 0) {
    visit(Decomposition{});
    return;
  }
  // Length = h backbone ups + homerun parts + mountain steps.
  for (std::uint32_t h = 1; h < n; ++h) {
    for (std::uint32_t parts = 1; parts <= h && h + parts <= n; ++parts) {
      const std::size_t budget = n - h - parts;
      Composition cur;
      compositions_with_parts(h, parts, cur, [&](const Composition& homerun) {
        Decomposition dec;
        dec.height = h;
        dec.bundles.resize(h);
        dec.homerun = homerun;
        distribute_bundles(dec, 0, budget, visit);
      });
    }
  }
}

std::vector<ValidatedPath> enumerate_nondecreasing_direct(std::size_t n) {
  std::vector<ValidatedPath> out;
  for_each_decomposition(n, [&](const Decomposition& d) { out.push_back(compose(d)); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

PathStats path_stats(const ValidatedPath& path) {
  PathStats s;
  s.length = path.length();
  long long h = 0;
  for (const Step st : path.steps()) {
    if (st.is_up()) {
      ++s.up_count;
    } else {
      ++s.downstep_count;
      s.total_fall += st.size();
    }
    h += st.rise();
    s.height = std::max(s.height, h);
  }
  s.valley_levels = valley_levels(path);
  return s;
}

StatisticsReport statistics(std::size_t n) {
  StatisticsReport rep;
  rep.length = n;
  for_each_nondecreasing_filter(n, [&](const ValidatedPath& p) {
    auto s = path_stats(p);
    ++rep.downstep_histogram[s.downstep_count];
    ++rep.height_histogram[s.height];
    ++rep.valley_count_histogram[s.valley_levels.size()];
    rep.paths.push_back(p);
    rep.records.push_back(std::move(s));
  });
  return rep;
}

}  // namespace deutsch
