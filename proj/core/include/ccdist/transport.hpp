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

#ifndef CCDIST_TRANSPORT_HPP
#define CCDIST_TRANSPORT_HPP

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "ccdist/types.hpp"

namespace ccdist {

using Frame = std::vector<std::byte>;

struct Envelope {
  Rank source = 0;
  Frame frame;
};

/**
 * In-process framed transport between machine ranks.
 *
 * One bounded FIFO mailbox per receiver. Frames from a given sender reach a
 * given receiver in send order, exactly once. A full mailbox pushes back on
 * senders: send() waits for room and try_send() refuses.
 */
class Transport {
 public:
  explicit Transport(std::size_t ranks, std::size_t mailbox_capacity = 64);

  Transport(const Transport&) = delete;
  Transport& operator=(const Transport&) = delete;

  std::size_t ranks() const noexcept { return boxes_.size(); }

  /// Blocks while dest's mailbox is full. Throws TransportError on a bad
  /// rank, a self-send, or after shutdown.
  void send(Rank source, Rank dest, Frame frame);
  /// Moves from \p frame only when it returns true.
  bool try_send(Rank source, Rank dest, Frame& frame);

  /// Waits up to \p timeout for mail, then takes everything queued.
  std::vector<Envelope> poll(Rank self, std::chrono::microseconds timeout);
  /// Waits up to \p timeout for mail or an interrupt; true if mail is queued.
  bool wait(Rank self, std::chrono::microseconds timeout);
  /// Wakes a pending wait()/poll() on \p self.
  void interrupt(Rank self);

  std::size_t pending(Rank self) const;
  std::size_t total_pending() const;

  /// Fails all later sends and wakes every waiter.
  void shutdown();
  bool is_shut_down() const;

 private:
  struct Mailbox {
    mutable std::mutex mu;
    std::condition_variable has_mail;
    std::condition_variable has_room;
    std::deque<Envelope> queue;
    bool interrupted = false;
  };

  Mailbox& box(Rank r, const char* op) const;
  void check_send(Rank source, Rank dest) const;

  std::size_t capacity_;
  std::vector<std::unique_ptr<Mailbox>> boxes_;
  std::atomic<bool> shut_down_{false};
};

}  // namespace ccdist

#endif  // CCDIST_TRANSPORT_HPP
