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

#include "ccdist/transport.hpp"

#include <string>

namespace ccdist {

Transport::Transport(std::size_t ranks, std::size_t mailbox_capacity)
    : capacity_(mailbox_capacity == 0 ? 1 : mailbox_capacity) {
  boxes_.reserve(ranks);
  for (std::size_t r = 0; r < ranks; ++r) boxes_.push_back(std::make_unique<Mailbox>());
}

Transport::Mailbox& Transport::box(Rank r, const char* op) const {
  if (r >= boxes_.size())
    throw TransportError(std::string(op) + ": rank " + std::to_string(r) + " out of range");
  return *boxes_[r];
}

void Transport::check_send(Rank source, Rank dest) const {
  if (source >= boxes_.size()) throw TransportError("send: source rank " + std::to_string(source) + " out of range");
  if (dest == source) throw TransportError("send: rank " + std::to_string(source) + " cannot send to itself");
  if (is_shut_down()) throw TransportError("send after shutdown");
}

void Transport::send(Rank source, Rank dest, Frame frame) {
  auto& b = box(dest, "send");
  check_send(source, dest);
  std::unique_lock lock(b.mu);
  b.has_room.wait(lock, [&] { return b.queue.size() < capacity_ || is_shut_down(); });
  if (is_shut_down()) throw TransportError("send after shutdown");
  b.queue.push_back({source, std::move(frame)});
  b.has_mail.notify_all();
}

bool Transport::try_send(Rank source, Rank dest, Frame& frame) {
  auto& b = box(dest, "send");
  check_send(source, dest);
  std::lock_guard lock(b.mu);
  if (b.queue.size() >= capacity_) return false;
  b.queue.push_back({source, std::move(frame)});
  b.has_mail.notify_all();
  return true;
}

std::vector<Envelope> Transport::poll(Rank self, std::chrono::microseconds timeout) {
  auto& b = box(self, "poll");
  std::unique_lock lock(b.mu);
  if (b.queue.empty() && timeout.count() > 0)
    b.has_mail.wait_for(lock, timeout, [&] { return !b.queue.empty() || is_shut_down(); });
  std::vector<Envelope> out(std::make_move_iterator(b.queue.begin()), std::make_move_iterator(b.queue.end()));
  b.queue.clear();
  if (!out.empty()) b.has_room.notify_all();
  return out;
}

bool Transport::wait(Rank self, std::chrono::microseconds timeout) {
  auto& b = box(self, "wait");
  std::unique_lock lock(b.mu);
  b.has_mail.wait_for(lock, timeout, [&] { return !b.queue.empty() || b.interrupted || is_shut_down(); });
  b.interrupted = false;
  return !b.queue.empty();
}

void Transport::interrupt(Rank self) {
  auto& b = box(self, "interrupt");
  std::lock_guard lock(b.mu);
  b.interrupted = true;
  b.has_mail.notify_all();
}

std::size_t Transport::pending(Rank self) const {
  auto& b = box(self, "pending");
  std::lock_guard lock(b.mu);
  return b.queue.size();
}

std::size_t Transport::total_pending() const {
  std::size_t total = 0;
  for (Rank r = 0; r < boxes_.size(); ++r) total += pending(r);
  return total;
}

void Transport::shutdown() {
  shut_down_.store(true);
  for (auto& b : boxes_) {
    std::lock_guard lock(b->mu);
    b->has_mail.notify_all();
    b->has_room.notify_all();
  }
}

bool Transport::is_shut_down() const { return shut_down_.load(); }

}  // namespace ccdist
