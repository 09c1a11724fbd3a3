/*
 * Copyright 2026 The ccdist Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "runtime.hpp"

#include <algorithm>
#include <array>

#include "ccdist/codec.hpp"
#include "ccdist/robin.hpp"
#include "parallel.hpp"

namespace ccdist {

void validate(const ClusterConfig& config) {
  if (config.machines == 0) throw DomainError("machine count must be at least 1");
  if (config.workers == 0) throw DomainError("workers per machine must be at least 1");
  if (config.partitions_per_machine == 0) throw DomainError("partitions per machine must be at least 1");
  if (config.buffer_capacity == 0) throw DomainError("buffer capacity must be at least 1 record");
  if (config.buffer_blocks == 0 || config.buffer_blocks > kMaxBlocks)
    throw DomainError("buffer blocks must be in 1..65535");
  if (config.mailbox_capacity == 0) throw DomainError("mailbox capacity must be at least 1 frame");
}

std::uint64_t DistributedResult::total_data_records_sent() const noexcept {
  std::uint64_t total = 0;
  for (const auto& m : machines) total += m.data_records_sent();
  return total;
}

std::uint64_t DistributedResult::total_bytes_sent() const noexcept {
  std::uint64_t total = 0;
  for (const auto& m : machines) total += m.bytes_sent();
  return total;
}

std::uint64_t DistributedResult::total_bytes_received() const noexcept {
  std::uint64_t total = 0;
  for (const auto& m : machines) total += m.bytes_received();
  return total;
}

std::uint64_t DistributedResult::total_edges_processed() const noexcept {
  std::uint64_t total = 0;
  for (const auto& m : machines) total += m.edges_processed;
  return total;
}

namespace detail {

namespace {

constexpr auto kIdleWait = std::chrono::milliseconds(20);
constexpr auto kRetryWait = std::chrono::microseconds(100);

PartitionMap make_partitions(const Graph& graph, const ClusterConfig& config, Algorithm algorithm) {
  auto pm = partition_edge_balanced(graph, static_cast<std::size_t>(config.machines) * config.partitions_per_machine);
  return algorithm == Algorithm::Siskin ? assign_round_robin(std::move(pm), config.machines)
                                        : assign_contiguous(std::move(pm), config.machines);
}

}  // namespace

// ---------------------------------------------------------------------------
// AbortableBarrier

void AbortableBarrier::arrive_and_wait() {
  std::unique_lock lock(mu_);
  if (aborted_) throw Aborted{};
  const auto generation = generation_;
  if (++arrived_ == parties_) {
    arrived_ = 0;
    ++generation_;
    cv_.notify_all();
    return;
  }
  cv_.wait(lock, [&] { return generation_ != generation || aborted_; });
  if (generation_ == generation) throw Aborted{};
}

void AbortableBarrier::abort() {
  std::lock_guard lock(mu_);
  aborted_ = true;
  cv_.notify_all();
}

// ---------------------------------------------------------------------------
// Cluster

Cluster::Cluster(const Graph& graph, const ClusterConfig& config, Algorithm algorithm)
    : graph_(graph),
      config_(config),
      algorithm_(algorithm),
      partitions_(make_partitions(graph, config, algorithm)),
      topology_(algorithm == Algorithm::Siskin ? Topology::Kind::StarToReducer : Topology::Kind::BinomialTree,
                config.machines),
      transport_(config.machines, config.mailbox_capacity),
      barrier_(config.machines),
      degree_slots_(config.machines) {}

Cluster::~Cluster() = default;

void Cluster::fail(Rank rank, std::exception_ptr error) {
  {
    std::lock_guard lock(error_mu_);
    if (!error_) {
      error_ = std::move(error);
      error_rank_ = rank;
    }
  }
  aborted_.store(true, std::memory_order_release);
  transport_.shutdown();
  barrier_.abort();
  for (auto& m : machines_) m->wake_all();
}

VertexId Cluster::reduce_max_degree(Rank rank, std::optional<std::pair<std::size_t, VertexId>> local) {
  degree_slots_[rank] = local;
  barrier_.arrive_and_wait();
  std::optional<std::pair<std::size_t, VertexId>> best;
  for (const auto& slot : degree_slots_) {
    if (!slot) continue;
    if (!best || slot->first > best->first || (slot->first == best->first && slot->second < best->second))
      best = slot;
  }
  if (!best) throw DomainError("max-degree reduction over an empty graph");
  return best->second;
}

DistributedResult Cluster::run() {
  validate(config_);
  const auto m = config_.machines;
  DistributedResult result;
  const auto n = graph_.vertex_count();
  if (n == 0) {
    result.machines.resize(m);
    for (Rank r = 0; r < m; ++r) {
      result.machines[r].rank = r;
      result.machines[r].bytes_sent_to.assign(m, 0);
      result.machines[r].bytes_received_from.assign(m, 0);
    }
    return result;
  }

  machines_.reserve(m);
  for (Rank r = 0; r < m; ++r) machines_.push_back(std::make_unique<Machine>(*this, r));
  {
    std::vector<std::jthread> threads;
    threads.reserve(m);
    for (auto& machine : machines_) threads.emplace_back([&machine] { machine->run(); });
  }

  if (error_) {
    try {
      std::rethrow_exception(error_);
    } catch (const RunError&) {
      throw;
    } catch (const std::exception& e) {
      throw RunError(error_rank_, e.what());
    } catch (...) {
      throw RunError(error_rank_, "unknown failure");
    }
  }
  if (const auto left = transport_.total_pending(); left != 0)
    throw RunError(0, std::to_string(left) + " frames were never received");

  result.labels = machines_[0]->labels();
  result.root_function = machines_[0]->root_function();
  result.id_width = machines_[0]->width();
  result.machines.reserve(m);
  for (auto& machine : machines_) result.machines.push_back(std::move(machine->stats()));
  return result;
}

// ---------------------------------------------------------------------------
// Outbound

Outbound::Outbound(Machine& machine, Phase phase)
    : machine_(machine), phase_(phase), zero_(machine.rank_count()), pair_(machine.rank_count()) {
  for (auto& b : zero_) b.type = MessageType::ZeroConverged;
  for (auto& b : pair_) b.type = MessageType::ParentPair;
}

Outbound::~Outbound() {
  if (!trace_.empty()) machine_.merge_trace(trace_);
}

void Outbound::zero_converged(Rank dest, VertexId v) {
  auto& b = zero_[dest];
  b.add_zero_converged(v);
  if (machine_.tracing()) trace_.push_back({dest, MessageType::ZeroConverged, phase_, v, 0});
  if (b.record_count >= machine_.capacity()) hand_off(dest, b);
}

void Outbound::parent_pair(Rank dest, VertexId child, RootValue value) {
  auto& b = pair_[dest];
  b.add_parent_pair(child, value);
  if (machine_.tracing()) trace_.push_back({dest, MessageType::ParentPair, phase_, child, value});
  if (b.record_count >= machine_.capacity()) hand_off(dest, b);
}

void Outbound::flush() {
  for (Rank d = 0; d < zero_.size(); ++d) {
    if (!zero_[d].empty()) hand_off(d, zero_[d]);
    if (!pair_[d].empty()) hand_off(d, pair_[d]);
  }
}

void Outbound::hand_off(Rank dest, MessageBuffer& buffer) {
  auto frame = encode_buffer(buffer, machine_.width(), machine_.blocks());
  machine_.enqueue_frame({dest, buffer.type, buffer.record_count, std::move(frame)});
  buffer.clear();
}

// ---------------------------------------------------------------------------
// Machine

Machine::Machine(Cluster& cluster, Rank rank)
    : cluster_(cluster),
      rank_(rank),
      parent_(cluster.topology().parent(rank)),
      child_count_(cluster.topology().children(rank).size()),
      partitions_(cluster.partitions().partitions_of(rank)),
      done_from_(cluster.config().machines, false) {
  stats_.rank = rank;
  stats_.bytes_sent_to.assign(cluster.config().machines, 0);
  stats_.bytes_received_from.assign(cluster.config().machines, 0);
}

Machine::~Machine() = default;

void Machine::wake_all() {
  { std::lock_guard lock(mu_); }
  cv_.notify_all();
  { std::lock_guard lock(out_mu_); }
  out_cv_.notify_all();
}

void Machine::merge_trace(std::vector<TraceRecord>& records) {
  std::lock_guard lock(trace_mu_);
  stats_.trace.insert(stats_.trace.end(), records.begin(), records.end());
  records.clear();
}

void Machine::run() {
  try {
    clock_ = MachineClock{};
    const auto n = cluster_.graph().vertex_count();
    setup_root_function();
    parents_ = ParentArray(n, f_, {ParentArray::Width::Auto, cluster_.config().audit_updates});
    width_ = cluster_.algorithm() == Algorithm::Robin ? id_byte_width(n + 1) : id_byte_width(n);
    comm_ = std::jthread([this] { comm_loop(); });
    if (cluster_.algorithm() == Algorithm::Robin) initial_push();
    compute();
    final_phase();
    finish_sending();
  } catch (const Aborted&) {
  } catch (...) {
    cluster_.fail(rank_, std::current_exception());
  }
  {
    std::lock_guard lock(out_mu_);
    closing_ = true;
  }
  cluster_.transport().interrupt(rank_);
  if (comm_.joinable()) comm_.join();
}

void Machine::setup_root_function() {
  if (cluster_.algorithm() == Algorithm::Siskin) {
    f_ = RootFunction::identity();
    return;
  }
  const auto& graph = cluster_.graph();
  const auto& pm = cluster_.partitions();
  std::optional<std::pair<std::size_t, VertexId>> local;
  for (const auto p : partitions_) {
    for (VertexId v = pm.boundaries[p]; v < pm.boundaries[p + 1]; ++v) {
      const auto d = graph.degree(v);
      if (!local || d > local->first) local = std::pair{d, v};
    }
  }
  f_ = RootFunction::robin(cluster_.reduce_max_degree(rank_, local));
}

void Machine::initial_push() {
  const auto plan = plan_initial_push(cluster_.graph(), cluster_.partitions(), f_.hub());
  if (owner_of(cluster_.partitions(), f_.hub()) == rank_) {
    Outbound out(*this, Phase::InitialPush);
    for (Rank dest = 0; dest < plan.size(); ++dest) {
      if (dest == rank_ || plan[dest].empty()) continue;
      for (const auto u : plan[dest]) out.zero_converged(dest, u);
    }
    out.flush();
    if (!plan[rank_].empty()) {
      // Self-delivery: the local share goes straight onto the zero queue.
      auto local = std::make_shared<MessageBuffer>();
      local->type = MessageType::ZeroConverged;
      for (const auto u : plan[rank_]) local->add_zero_converged(u);
      local->block_count = blocks_for(local->record_count, blocks());
      std::lock_guard lock(mu_);
      enqueue_buffer_locked(std::move(local));
    }
  }
  flush_and_wait();
  // Every push frame now sits in a mailbox, so no receiver can conclude early.
  cluster_.barrier().arrive_and_wait();
}

void Machine::compute() {
  {
    std::lock_guard lock(mu_);
    if (partitions_.empty()) record_timestamp(stats_, Timestamp::T1, clock_);
  }
  {
    std::vector<std::jthread> threads;
    threads.reserve(cluster_.config().workers);
    for (std::size_t tid = 0; tid < cluster_.config().workers; ++tid)
      threads.emplace_back([this, tid] { worker(tid); });
  }
  cluster_.check_abort();
  stats_.timestamps[1] = std::max(stats_.at(Timestamp::T1), last_message_done_);
  stats_.edges_processed = edges_processed_.load();
  stats_.messages_processed = messages_processed_.load();
  stats_.max_slot_updates = parents_.max_updates();
}

void Machine::worker(std::size_t tid) {
  try {
    std::mt19937_64 rng(cluster_.config().seed * 0x9e3779b97f4a7c15ull + rank_ * 1000003ull + tid);
    Outbound out(*this, Phase::Computation);
    std::uint64_t edges = 0;
    std::uint64_t records = 0;
    for (;;) {
      WorkItem item;
      {
        std::unique_lock lock(mu_);
        bool flushed = false;
        bool have = false;
        for (;;) {
          cluster_.check_abort();
          if (take_locked(item, rng)) {
            have = true;
            break;
          }
          if (!flushed) {
            // Nothing to do right now: push partial buffers out before idling.
            lock.unlock();
            out.flush();
            lock.lock();
            flushed = true;
            continue;
          }
          if (concluded_locked()) {
            cv_.notify_all();
            break;
          }
          cv_.wait(lock);
        }
        if (!have) break;
      }
      process(item, out, edges, records);
      {
        std::lock_guard lock(mu_);
        if (item.kind == WorkItem::Kind::Partition) {
          if (++partitions_done_ == partitions_.size()) record_timestamp(stats_, Timestamp::T1, clock_);
        } else {
          --outstanding_blocks_;
          last_message_done_ = clock_.elapsed();
        }
        if (concluded_locked()) cv_.notify_all();
      }
    }
    edges_processed_ += edges;
    messages_processed_ += records;
  } catch (const Aborted&) {
  } catch (...) {
    cluster_.fail(rank_, std::current_exception());
  }
}

bool Machine::take_locked(WorkItem& item, std::mt19937_64& rng) {
  enum Source { Partitions, Zero, Pairs };
  std::array<Source, 3> order{Zero, Pairs, Partitions};
  std::size_t count = 3;
  if (cluster_.algorithm() == Algorithm::Siskin) {
    order = {Partitions, Pairs, Zero};
    count = 2;
  }
  if (cluster_.config().randomize_priority) std::shuffle(order.begin(), order.begin() + count, rng);
  for (std::size_t i = 0; i < count; ++i) {
    switch (order[i]) {
      case Partitions:
        if (next_partition_ < partitions_.size()) {
          item = {WorkItem::Kind::Partition, partitions_[next_partition_++], nullptr};
          return true;
        }
        break;
      case Zero:
        if (!zero_queue_.empty()) {
          item = std::move(zero_queue_.front());
          zero_queue_.pop_front();
          return true;
        }
        break;
      case Pairs:
        if (!pair_queue_.empty()) {
          item = std::move(pair_queue_.front());
          pair_queue_.pop_front();
          return true;
        }
        break;
    }
  }
  return false;
}

bool Machine::concluded_locked() const {
  ConcludeState state;
  state.partitions_done = partitions_done_ == partitions_.size();
  state.children = child_count_;
  state.done_received = done_children_;
  state.undrained = outstanding_blocks_ + cluster_.transport().pending(rank_);
  return conclude(state);
}

void Machine::process(const WorkItem& item, Outbound& out, std::uint64_t& edges, std::uint64_t& records) {
  const auto& graph = cluster_.graph();
  const auto n = graph.vertex_count();
  switch (item.kind) {
    case WorkItem::Kind::Partition: {
      const auto& pm = cluster_.partitions();
      for (VertexId u = pm.boundaries[item.index]; u < pm.boundaries[item.index + 1]; ++u) {
        for (const auto v : graph.neighbors(u)) on_hook(jt::hook_edge(parents_, u, v, f_), out);
        edges += graph.degree(u);
      }
      break;
    }
    case WorkItem::Kind::ZeroBlock: {
      const auto [begin, end] = item.buffer->block(item.index);
      for (auto i = begin; i < end; ++i) {
        const VertexId v = item.buffer->fields[i];
        if (v >= n) throw ProtocolError("zero-converged vertex " + std::to_string(v) + " out of range");
        on_hook(jt::hook_edge(parents_, v, f_.hub(), f_), out);
      }
      records += end - begin;
      break;
    }
    case WorkItem::Kind::PairBlock: {
      const auto [begin, end] = item.buffer->block(item.index);
      for (auto i = begin; i < end; ++i) {
        const VertexId child = item.buffer->fields[2 * i];
        if (child >= n) throw ProtocolError("parent pair child " + std::to_string(child) + " out of range");
        const auto target = f_.checked_inverse(item.buffer->fields[2 * i + 1], n);
        on_hook(jt::hook_edge(parents_, child, target, f_), out);
      }
      records += end - begin;
      break;
    }
  }
}

void Machine::on_hook(const jt::HookOutcome& outcome, Outbound& out) {
  if (!outcome.hooked()) return;
  if (cluster_.algorithm() == Algorithm::Siskin) {
    if (rank_ != 0) out.parent_pair(0, outcome.loser_root, outcome.winner_value);
  } else if (parent_ && outcome.winner_value == 0) {
    out.zero_converged(*parent_, outcome.loser_root);
  }
}

void Machine::final_phase() {
  const auto n = parents_.size();
  const auto workers = cluster_.config().workers;
  if (!parent_) {
    jt::pointer_jump_all(parents_, f_, workers);
    record_timestamp(stats_, Timestamp::T3, clock_);
    return;
  }
  if (cluster_.algorithm() == Algorithm::Siskin) {
    // Non-reducers hand everything over during computation.
    stats_.timestamps[2] = stats_.at(Timestamp::T2);
    return;
  }
  const auto parent = *parent_;
  detail::parallel_for(workers, n, [&](std::size_t, std::size_t begin, std::size_t end) {
    Outbound out(*this, Phase::Final);
    for (VertexId v = begin; v < end; ++v) {
      const auto before = parents_.load(v);
      const auto root = jt::find_root(parents_, v, f_);
      if (root.value == 0 && before != 0) out.zero_converged(parent, v);
      parents_.store(v, root.value);
      if (root.value != f_.forward(v) && root.value != 0) out.parent_pair(parent, v, root.value);
    }
    out.flush();
  });
  record_timestamp(stats_, Timestamp::T3, clock_);
}

void Machine::finish_sending() {
  if (!parent_) {
    stats_.timestamps[3] = stats_.at(Timestamp::T3);
    return;
  }
  flush_and_wait();
  MessageBuffer done;
  done.type = MessageType::Done;
  done.add_done();
  enqueue_frame({*parent_, MessageType::Done, 1, encode_buffer(done, width_, 1)});
  flush_and_wait();
  record_timestamp(stats_, Timestamp::T4, clock_);
}

void Machine::enqueue_frame(OutgoingFrame frame) {
  {
    std::lock_guard lock(out_mu_);
    outbox_.push_back(std::move(frame));
    ++unsent_frames_;
  }
  cluster_.transport().interrupt(rank_);
}

void Machine::flush_and_wait() {
  std::unique_lock lock(out_mu_);
  out_cv_.wait(lock, [&] { return unsent_frames_ == 0 || cluster_.aborted(); });
  cluster_.check_abort();
}

void Machine::enqueue_buffer_locked(std::shared_ptr<const MessageBuffer> buffer) {
  const auto kind =
      buffer->type == MessageType::ZeroConverged ? WorkItem::Kind::ZeroBlock : WorkItem::Kind::PairBlock;
  auto& queue = kind == WorkItem::Kind::ZeroBlock ? zero_queue_ : pair_queue_;
  for (std::size_t b = 0; b < buffer->block_count; ++b) queue.push_back({kind, b, buffer});
  outstanding_blocks_ += buffer->block_count;
}

void Machine::receive_locked(Envelope& envelope) {
  auto buffer = decode_frame(envelope.frame, width_);
  const auto bytes = envelope.frame.size();
  auto& traffic = stats_.of(buffer.type);
  traffic.records_received += buffer.record_count;
  traffic.bytes_received += bytes;
  stats_.bytes_received_from.at(envelope.source) += bytes;
  ++stats_.frames_received;

  const auto& children = cluster_.topology().children(rank_);
  switch (buffer.type) {
    case MessageType::Done:
      if (std::find(children.begin(), children.end(), envelope.source) == children.end())
        throw ProtocolError("done from rank " + std::to_string(envelope.source) + ", which is not a child");
      if (buffer.record_count != 1 || done_from_[envelope.source])
        throw ProtocolError("duplicate done from rank " + std::to_string(envelope.source));
      done_from_[envelope.source] = true;
      ++done_children_;
      break;
    case MessageType::ZeroConverged:
      if (cluster_.algorithm() == Algorithm::Siskin)
        throw ProtocolError("zero-converged records are not part of the star protocol");
      [[fallthrough]];
    case MessageType::ParentPair:
      if (!buffer.empty()) enqueue_buffer_locked(std::make_shared<const MessageBuffer>(std::move(buffer)));
      break;
  }
}

void Machine::comm_loop() {
  try {
    auto& transport = cluster_.transport();
    const auto& hook = cluster_.config().frame_hook;
    std::deque<OutgoingFrame> sending;
    for (;;) {
      if (cluster_.aborted()) return;
      {
        std::lock_guard lock(out_mu_);
        while (!outbox_.empty()) {
          sending.push_back(std::move(outbox_.front()));
          outbox_.pop_front();
          if (hook) hook(rank_, sending.back().dest, sending.back().frame);
        }
      }
      std::size_t sent = 0;
      while (!sending.empty()) {
        auto& next = sending.front();
        const auto bytes = next.frame.size();
        if (!transport.try_send(rank_, next.dest, next.frame)) break;
        auto& traffic = stats_.of(next.type);
        traffic.records_sent += next.records;
        traffic.bytes_sent += bytes;
        stats_.bytes_sent_to[next.dest] += bytes;
        ++stats_.frames_sent;
        sending.pop_front();
        ++sent;
      }
      if (sent != 0) {
        std::lock_guard lock(out_mu_);
        unsent_frames_ -= sent;
        if (unsent_frames_ == 0) out_cv_.notify_all();
      }
      {
        std::lock_guard lock(mu_);
        auto mail = transport.poll(rank_, std::chrono::microseconds(0));
        for (auto& envelope : mail) receive_locked(envelope);
        if (!mail.empty()) cv_.notify_all();
      }
      {
        std::lock_guard lock(out_mu_);
        if (closing_ && outbox_.empty() && sending.empty()) return;
      }
      transport.wait(rank_, sending.empty() ? std::chrono::duration_cast<std::chrono::microseconds>(kIdleWait)
                                            : kRetryWait);
    }
  } catch (...) {
    cluster_.fail(rank_, std::current_exception());
  }
}

}  // namespace detail
}  // namespace ccdist
