/*
 * Copyright 2026 The folab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "folab/xof.hpp"

#include <memory>

#include <openssl/evp.h>

#include "folab/errors.hpp"

namespace folab {

namespace {

struct CtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

}  // namespace

Bytes shake256(const Bytes& input, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, CtxDeleter> ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1) {
    throw Error("shake256: init failed");
  }
  if (!input.empty() &&
      EVP_DigestUpdate(ctx.get(), input.data(), input.size()) != 1) {
    throw Error("shake256: update failed");
  }
  Bytes out(out_len);
  if (out_len > 0 &&
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw Error("shake256: squeeze failed");
  }
  return out;
}

XofStream::XofStream(Bytes input) : input_(std::move(input)) {}

void XofStream::ensure(std::size_t len) {
  if (buffer_.size() >= len) {
    return;
  }
  std::size_t target = buffer_.empty() ? 64 : buffer_.size();
  while (target < len) {
    target *= 2;
  }
  // XOF outputs of different lengths share a common prefix, so regrowing
  // the buffer never changes bytes already handed out.
  buffer_ = shake256(input_, target);
}

std::uint8_t XofStream::byte_at(std::size_t index) {
  ensure(index + 1);
  return buffer_[index];
}

Bytes XofStream::range(std::size_t offset, std::size_t len) {
  ensure(offset + len);
  return Bytes(buffer_.begin() + static_cast<std::ptrdiff_t>(offset),
               buffer_.begin() + static_cast<std::ptrdiff_t>(offset + len));
}

Bytes xof_frame(std::uint8_t tag, const Bytes& context, const Bytes& message) {
  Bytes framed;
  framed.reserve(1 + 16 + context.size() + message.size());
  framed.push_back(tag);
  append_le64(framed, context.size());
  append_bytes(framed, context);
  append_le64(framed, message.size());
  append_bytes(framed, message);
  return framed;
}

}  // namespace folab
