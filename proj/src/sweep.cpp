#include "movcone/sweep.hpp"

#include "movcone/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace movcone {

PartitionStream::PartitionStream(int total, int max_parts) : total_(total), max_parts_(max_parts) {
  if (total < 1 || max_parts < 1)
    throw Error(Errc::InvalidArgument, "partitions need total >= 1 and max_parts >= 1");
}

bool PartitionStream::advance() {
  const int k = parts_;
  for (int i = k - 2; i >= 0; --i) {
    const int v = current_[i] + 1;
    int used = std::accumulate(current_.begin(), current_.begin() + i, 0) + v * (k - 1 - i);
    if (total_ - used >= v) {
      for (int p = i; p < k - 1; ++p)
        current_[p] = v;
      current_[k - 1] = total_ - used;
      return true;
    }
  }
  return false;
}

std::optional<std::vector<int>> PartitionStream::next() {
  if (done_)
    return std::nullopt;
  if (started_ && advance())
    return current_;
  if (started_)
    ++parts_;
  started_ = true;
  if (parts_ > std::min(max_parts_, total_)) {
    done_ = true;
    return std::nullopt;
  }
  current_.assign(parts_, 1);
  current_.back() = total_ - (parts_ - 1);
  return current_;
}

std::vector<std::vector<int>> enumerate_partitions(int total, int max_parts) {
  std::vector<std::vector<int>> out;
  PartitionStream s(total, max_parts);
  while (auto p = s.next())
    out.push_back(std::move(*p));
  return out;
}

namespace {

void validate_task(const SweepTask& t) {
  if (t.n < 1 || t.j_size < 1)
    throw Error(Errc::InvalidArgument, "sweep task needs n >= 1 and |J| >= 1");
  if (static_cast<int>(t.partition.size()) > t.n)
    throw Error(Errc::InvalidArgument, "partition has more than n parts");
  int sum = 0, prev = 1;
  for (int r : t.partition) {
    if (r < prev)
      throw Error(Errc::InvalidArgument, "partition parts must be positive and ascending");
    prev = r;
    sum += r;
  }
  if (sum != t.j_size)
    throw Error(Errc::InvalidArgument, "partition does not sum to |J|");
}

TaskVerdict verdict_for(const SweepTask& t, Inertia in) {
  return {in == Inertia{t.j_size - 1, 1, 0}, in};
}

} // namespace

TaskVerdict check_task(const SweepTask& t) {
  validate_task(t);
  const std::size_t p = t.partition.size();
  const Rational n(t.n);
  const Rational c = make_rational(2 * t.n + 1, 2);
  RationalMatrix g(p, p);
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t l = 0; l < p; ++l) {
      Rational rk(t.partition[k]), rl(t.partition[l]);
      g(k, l) = k == l ? Rational(rk * (1 + n) - n * rk * rk) : Rational(-c * rk * rl);
    }
  Inertia in = signature(g);
  in.positive += t.j_size - static_cast<int>(p);
  return verdict_for(t, in);
}

TaskVerdict check_task_naive(const SweepTask& t) {
  validate_task(t);
  return verdict_for(t, signature(partition_gram(t.n, t.partition)));
}

bool is_anchor(const SweepTask& t) {
  return t.partition.size() == 1 ||
         std::all_of(t.partition.begin(), t.partition.end(), [](int r) { return r == 1; });
}

namespace {

using nlohmann::json;

json task_json(const Counterexample& c) {
  return {{"n", c.task.n},
          {"jSize", c.task.j_size},
          {"partition", c.task.partition},
          {"signature", {c.inertia.positive, c.inertia.negative, c.inertia.zero}}};
}

Counterexample task_from_json(const json& j) {
  Counterexample c;
  c.task.n = j.at("n").get<int>();
  c.task.j_size = j.at("jSize").get<int>();
  c.task.partition = j.at("partition").get<std::vector<int>>();
  const auto& s = j.at("signature");
  c.inertia = {s.at(0).get<int>(), s.at(1).get<int>(), s.at(2).get<int>()};
  return c;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct State {
  std::size_t next_cell = 0;
  std::uint64_t tasks = 0;
  std::uint64_t anchors = 0;
  std::vector<Counterexample> counterexamples;
};

json checkpoint_body(const SweepOptions& o, const std::vector<std::pair<int, int>>& cells,
                     const State& s) {
  json body = {{"nRange", {o.n_min, o.n_max}},
               {"jRange", {o.j_min, o.j_max}},
               {"tasks", s.tasks},
               {"anchors", s.anchors},
               {"counterexamples", json::array()}};
  if (s.next_cell < cells.size())
    body["cursor"] = {{"n", cells[s.next_cell].first}, {"jSize", cells[s.next_cell].second}};
  else
    body["cursor"] = nullptr;
  for (const auto& c : s.counterexamples)
    body["counterexamples"].push_back(task_json(c));
  return body;
}

void write_checkpoint(const std::filesystem::path& path, const json& body) {
  json file = {{"body", body}, {"hash", fnv1a(body.dump())}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(Errc::Io, "cannot write checkpoint " + tmp.string());
    out << file.dump(2) << '\n';
    out.flush();
    if (!out)
      throw Error(Errc::Io, "cannot write checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    throw Error(Errc::Io, "cannot replace checkpoint " + path.string() + ": " + ec.message());
}

State read_checkpoint(const std::filesystem::path& path, const SweepOptions& o,
                      const std::vector<std::pair<int, int>>& cells) {
  std::ifstream in(path);
  if (!in)
    throw Error(Errc::Io, "cannot read checkpoint " + path.string());
  json file;
  try {
    file = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::Io, "checkpoint " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    const json& body = file.at("body");
    if (fnv1a(body.dump()) != file.at("hash").get<std::string>())
      throw Error(Errc::Io, "checkpoint " + path.string() + " fails its content hash");
    if (body.at("nRange") != json{o.n_min, o.n_max} || body.at("jRange") != json{o.j_min, o.j_max})
      throw Error(Errc::Io, "checkpoint " + path.string() + " was written for different ranges");
    State s;
    s.tasks = body.at("tasks").get<std::uint64_t>();
    s.anchors = body.at("anchors").get<std::uint64_t>();
    for (const auto& c : body.at("counterexamples"))
      s.counterexamples.push_back(task_from_json(c));
    const json& cursor = body.at("cursor");
    if (cursor.is_null()) {
      s.next_cell = cells.size();
    } else {
      std::pair<int, int> cell{cursor.at("n").get<int>(), cursor.at("jSize").get<int>()};
      auto it = std::find(cells.begin(), cells.end(), cell);
      if (it == cells.end())
        throw Error(Errc::Io, "checkpoint cursor lies outside the sweep ranges");
      s.next_cell = static_cast<std::size_t>(it - cells.begin());
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::Io, "checkpoint " + path.string() + " is malformed: " + e.what());
  }
}

void log_counterexample(const std::filesystem::path& path, const Counterexample& c) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw Error(Errc::Io, "cannot append to " + path.string());
  out << "n=" << c.task.n << " jSize=" << c.task.j_size << " partition=(";
  for (std::size_t k = 0; k < c.task.partition.size(); ++k)
    out << (k ? "," : "") << c.task.partition[k];
  out << ") signature=(" << c.inertia.positive << "," << c.inertia.negative << ","
      << c.inertia.zero << ")\n"
      << format_matrix(partition_gram(c.task.n, c.task.partition).matrix()) << "\n";
  out.flush();
}

std::vector<TaskVerdict> run_cell(const std::vector<SweepTask>& tasks, int threads) {
  std::vector<TaskVerdict> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++)
      results[k] = check_task(tasks[k]);
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (count == 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < count; ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  return results;
}

} // namespace

SweepReport sweep(const SweepOptions& o) {
  if (o.n_min < 2 || o.n_max < o.n_min)
    throw Error(Errc::InvalidArgument, "n range must satisfy 2 <= n_min <= n_max");
  if (o.j_min < 2 || o.j_max < o.j_min)
    throw Error(Errc::InvalidArgument, "|J| range must satisfy 2 <= j_min <= j_max");
  if (o.threads < 1)
    throw Error(Errc::InvalidArgument, "threads must be >= 1");

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<int, int>> cells;
  for (int n = o.n_min; n <= o.n_max; ++n)
    for (int j = o.j_min; j <= o.j_max; ++j)
      cells.emplace_back(n, j);

  State s;
  if (o.checkpoint && std::filesystem::exists(*o.checkpoint))
    s = read_checkpoint(*o.checkpoint, o, cells);

  int processed = 0;
  while (s.next_cell < cells.size()) {
    if (o.max_cells && processed >= *o.max_cells)
      break;
    const auto [n, j] = cells[s.next_cell];
    std::vector<SweepTask> tasks;
    PartitionStream parts(j, n);
    while (auto p = parts.next())
      tasks.push_back({n, j, std::move(*p)});
    std::vector<TaskVerdict> results = run_cell(tasks, o.threads);
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      ++s.tasks;
      if (is_anchor(tasks[k]))
        ++s.anchors;
      if (!results[k].lorentzian) {
        Counterexample c{tasks[k], results[k].inertia};
        if (o.counterexample_log)
          log_counterexample(*o.counterexample_log, c);
        s.counterexamples.push_back(std::move(c));
      }
    }
    ++s.next_cell;
    ++processed;
    if (o.checkpoint)
      write_checkpoint(*o.checkpoint, checkpoint_body(o, cells, s));
  }

  SweepReport r;
  r.n_range = {o.n_min, o.n_max};
  r.j_range = {o.j_min, o.j_max};
  r.tasks = s.tasks;
  r.anchors = s.anchors;
  r.counterexamples = std::move(s.counterexamples);
  r.complete = s.next_cell == cells.size();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

} // namespace movcone
