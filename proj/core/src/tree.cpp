#include "antimagic/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

namespace antimagic {

namespace {

// Key that identifies an undirected edge regardless of endpoint order.
std::uint64_t edge_key(VertexId u, VertexId v) {
  auto [lo, hi] = std::minmax(u, v);
  return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
}

}  // namespace

Tree Tree::from_edges(VertexId n, std::vector<Edge> edges) {
  if (n < 1) throw parse_error("tree order must be at least 1");
  const auto m = static_cast<std::int64_t>(edges.size());

  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw parse_error("vertex id out of range [0, " + std::to_string(n - 1) + "]");
    if (e.u == e.v) throw parse_error("self-loop at vertex " + std::to_string(e.u));
  }

  {
    std::vector<std::uint64_t> keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) keys[i] = edge_key(edges[i].u, edges[i].v);
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
      throw parse_error("duplicate edge");
  }

  if (m > n - 1) throw parse_error("cycle detected: " + std::to_string(m) + " edges on " +
                                   std::to_string(n) + " vertices");
  if (m < n - 1) throw parse_error("disconnected: " + std::to_string(m) + " edges on " +
                                   std::to_string(n) + " vertices");

  Tree t;
  t.n_ = n;
  t.edges_ = std::move(edges);

  t.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : t.edges_) {
    ++t.offsets_[static_cast<std::size_t>(e.u) + 1];
    ++t.offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  std::partial_sum(t.offsets_.begin(), t.offsets_.end(), t.offsets_.begin());
  t.adj_.resize(static_cast<std::size_t>(2) * t.edges_.size());
  {
    std::vector<std::int64_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
    for (EdgeId id = 0; id < t.edge_count(); ++id) {
      const Edge& e = t.edges_[static_cast<std::size_t>(id)];
      t.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.u)]++)] = {e.v, id};
      t.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.v)]++)] = {e.u, id};
    }
  }

  // m == n-1 and no duplicates, so connectivity is the one property left.
  if (n > 1) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> queue;
    queue.reserve(static_cast<std::size_t>(n));
    queue.push_back(0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Neighbor& nb : t.neighbors(queue[head])) {
        if (!seen[static_cast<std::size_t>(nb.to)]) {
          seen[static_cast<std::size_t>(nb.to)] = 1;
          queue.push_back(nb.to);
        }
      }
    }
    if (queue.size() != static_cast<std::size_t>(n)) throw parse_error("disconnected");
  }

  return t;
}

namespace {

struct ParsedLine {
  VertexId u;
  VertexId v;
  int line;
};

VertexId parse_vertex_id(std::string_view token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::invalid_argument || ptr != last)
    throw parse_error("malformed line: expected two vertex ids", line);
  if (ec == std::errc::result_out_of_range || value < 0 ||
      value > std::numeric_limits<VertexId>::max() - 1)
    throw parse_error("vertex id out of range", line);
  return static_cast<VertexId>(value);
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
  std::vector<ParsedLine> parsed;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line > 0) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line;

    // Tokenize on blanks; skip comments and empty lines.
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) tokens.push_back(raw.substr(start, i - start));
    }
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') continue;
    if (tokens.size() != 2) throw parse_error("malformed line: expected two vertex ids", line);

    ParsedLine pl{parse_vertex_id(tokens[0], line), parse_vertex_id(tokens[1], line), line};
    if (pl.u == pl.v) throw parse_error("self-loop at vertex " + std::to_string(pl.u), line);
    parsed.push_back(pl);
  }

  if (parsed.empty()) throw parse_error("empty input: no edges");

  const auto m = static_cast<std::int64_t>(parsed.size());
  VertexId max_id = 0;
  for (const ParsedLine& pl : parsed) max_id = std::max({max_id, pl.u, pl.v});

  // A tree on m edges has m+1 vertices, so any id beyond m proves the ids
  // are not dense. Checking this first keeps allocations proportional to
  // the input.
  if (static_cast<std::int64_t>(max_id) > m)
    throw parse_error("vertex ids are not dense: id " + std::to_string(max_id) + " with only " +
                      std::to_string(m) + " edges");

  // Duplicate detection with the line number of the second occurrence.
  {
    std::vector<std::pair<std::uint64_t, int>> keys;
    keys.reserve(parsed.size());
    for (const ParsedLine& pl : parsed) keys.emplace_back(edge_key(pl.u, pl.v), pl.line);
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
      if (keys[i].first == keys[i - 1].first)
        throw parse_error("duplicate edge", keys[i].second);
  }

  const VertexId n = max_id + 1;
  {
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const ParsedLine& pl : parsed) {
      present[static_cast<std::size_t>(pl.u)] = 1;
      present[static_cast<std::size_t>(pl.v)] = 1;
    }
    for (VertexId v = 0; v < n; ++v)
      if (!present[static_cast<std::size_t>(v)])
        throw parse_error("vertex ids are not dense: id " + std::to_string(v) + " missing");
  }

  std::vector<Edge> edges;
  edges.reserve(parsed.size());
  for (const ParsedLine& pl : parsed) edges.push_back({pl.u, pl.v});
  return Tree::from_edges(n, std::move(edges));
}

std::string serialize_edge_list(const Tree& tree) {
  std::string out;
  out.reserve(static_cast<std::size_t>(tree.edge_count()) * 8);
  for (const Edge& e : tree.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Bipartition bipartition(const Tree& tree, VertexId root) {
  Bipartition bp;
  bp.class_of.assign(static_cast<std::size_t>(tree.order()), Side::A);
  std::vector<char> seen(static_cast<std::size_t>(tree.order()), 0);
  std::vector<VertexId> queue;
  queue.reserve(static_cast<std::size_t>(tree.order()));
  queue.push_back(root);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    Side next = bp.class_of[static_cast<std::size_t>(v)] == Side::A ? Side::B : Side::A;
    for (const Tree::Neighbor& nb : tree.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(nb.to)]) {
        seen[static_cast<std::size_t>(nb.to)] = 1;
        bp.class_of[static_cast<std::size_t>(nb.to)] = next;
        queue.push_back(nb.to);
      }
    }
  }
  return bp;
}

}  // namespace antimagic
