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

#ifndef CCDIST_SRC_RUNTIME_HPP
#define CCDIST_SRC_RUNTIME_HPP

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "ccdist/cluster.hpp"
#include "ccdist/graph.hpp"
#include "ccdist/jt.hpp"
#include "ccdist/parent_array.hpp"
#include "ccdist/topology.hpp"
#include "ccdist/transport.hpp"

namespace ccdist::detail {

enum class Algorithm { Siskin, Robin };

/// Thrown inside machine threads to unwind after another machine failed.
struct Aborted {};

class AbortableBarrier {
 public:
  explicit AbortableBarrier(std::size_t parties) : parties_(parties) {}
  void arrive_and_wait();
  void abort();

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::size_t parties_;
  std::size_t arrived_ = 0;
  std::size_t generation_ = 0;
  bool aborted_ = false;
};

class Machine;

/// State shared by every simulated machine in one run.
class Cluster {
 public:
  Cluster(const Graph& graph, const ClusterConfig& config, Algorithm algorithm);
  ~Cluster();

  DistributedResult run();

  const Graph& graph() const noexcept { return graph_; }
  const ClusterConfig& config() const noexcept { return config_; }
  Algorithm algorithm() const noexcept { return algorithm_; }
  const PartitionMap& partitions() const noexcept { return partitions_; }
  const Topology& topology() const noexcept { return topology_; }
  Transport& transport() noexcept { return transport_; }
  AbortableBarrier& barrier() noexcept { return barrier_; }

  bool aborted() const noexcept { return aborted_.load(std::memory_order_acquire); }
  void fail(Rank rank, std::exception_ptr error);
  void check_abort() const {
    if (aborted()) throw Aborted{};
  }

  /// Blocking all-reduce of (degree, vertex): highest degree, lowest ID.
  VertexId reduce_max_degree(Rank rank, std::optional<std::pair<std::size_t, VertexId>> local);

 private:
  const Graph& graph_;
  ClusterConfig config_;
  Algorithm algorithm_;
  PartitionMap partitions_;
  Topology topology_;
  Transport transport_;
  AbortableBarrier barrier_;
  std::vector<std::unique_ptr<Machine>> machines_;
  std::vector<std::optional<std::pair<std::size_t, VertexId>>> degree_slots_;

  std::atomic<bool> aborted_{false};
  std::mutex error_mu_;
  std::exception_ptr error_;
  Rank error_rank_ = 0;
};

struct WorkItem {
  enum class Kind { Partition, ZeroBlock, PairBlock };
  Kind kind = Kind::Partition;
  std::size_t index = 0;  // partition index or block index
  std::shared_ptr<const MessageBuffer> buffer;
};

struct OutgoingFrame {
  Rank dest = 0;
  MessageType type = MessageType::ZeroConverged;
  std::size_t records = 0;
  Frame frame;
};

class Machine;

/// Per-worker outgoing buffers, one per (destination, record type).
class Outbound {
 public:
  Outbound(Machine& machine, Phase phase);
  ~Outbound();

  void zero_converged(Rank dest, VertexId v);
  void parent_pair(Rank dest, VertexId child, RootValue value);
  /// Hands every partial buffer to the communication handler.
  void flush();

 private:
  void hand_off(Rank dest, MessageBuffer& buffer);

  Machine& machine_;
  Phase phase_;
  std::vector<MessageBuffer> zero_;
  std::vector<MessageBuffer> pair_;
  std::vector<TraceRecord> trace_;
};

class Machine {
 public:
  Machine(Cluster& cluster, Rank rank);
  ~Machine();

  void run();
  void wake_all();

  Rank rank() const noexcept { return rank_; }
  MachineStats& stats() noexcept { return stats_; }
  std::vector<RootValue> labels() const { return parents_.snapshot(); }
  std::size_t capacity() const noexcept { return cluster_.config().buffer_capacity; }
  std::size_t blocks() const noexcept { return cluster_.config().buffer_blocks; }
  Rank rank_count() const noexcept { return cluster_.config().machines; }
  const RootFunction& root_function() const noexcept { return f_; }
  unsigned width() const noexcept { return width_; }
  bool tracing() const noexcept { return cluster_.config().trace; }

  void enqueue_frame(OutgoingFrame frame);
  void merge_trace(std::vector<TraceRecord>& records);

 private:
  // Lifecycle pieces.
  void setup_root_function();
  void initial_push();
  void compute();
  void worker(std::size_t tid);
  void final_phase();
  void finish_sending();

  // Communication handler.
  void comm_loop();
  void receive_locked(Envelope& envelope);
  void flush_and_wait();

  bool take_locked(WorkItem& item, std::mt19937_64& rng);
  bool concluded_locked() const;
  void process(const WorkItem& item, Outbound& out, std::uint64_t& edges, std::uint64_t& records);
  void on_hook(const jt::HookOutcome& outcome, Outbound& out);
  void enqueue_buffer_locked(std::shared_ptr<const MessageBuffer> buffer);

  Cluster& cluster_;
  Rank rank_;
  std::optional<Rank> parent_;
  std::size_t child_count_ = 0;
  RootFunction f_ = RootFunction::identity();
  unsigned width_ = 1;
  ParentArray parents_;
  MachineStats stats_;
  MachineClock clock_;

  std::vector<std::size_t> partitions_;

  // Worker coordination; guarded by mu_.
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::size_t next_partition_ = 0;
  std::size_t partitions_done_ = 0;
  std::deque<WorkItem> zero_queue_;
  std::deque<WorkItem> pair_queue_;
  std::size_t outstanding_blocks_ = 0;
  std::size_t done_children_ = 0;
  std::vector<bool> done_from_;
  double last_message_done_ = 0.0;

  // Outgoing frames; guarded by out_mu_.
  std::mutex out_mu_;
  std::condition_variable out_cv_;
  std::deque<OutgoingFrame> outbox_;
  std::size_t unsent_frames_ = 0;
  bool closing_ = false;

  std::mutex trace_mu_;
  std::atomic<std::uint64_t> edges_processed_{0};
  std::atomic<std::uint64_t> messages_processed_{0};

  std::jthread comm_;
};

}  // namespace ccdist::detail

#endif  // CCDIST_SRC_RUNTIME_HPP
