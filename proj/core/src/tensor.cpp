// Copyright 2026 The Graspkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graspkit/tensor.hpp"

#include <cstring>
#include <fstream>

namespace graspkit {

namespace {
constexpr char kMagic[4] = {'G', 'P', 'T', 'N'};
}

Quat tensor_quaternion(const Tensor& t, int v, int u) {
  return Quat(t.at(channel::kQuatW, v, u), t.at(channel::kQuatX, v, u),
              t.at(channel::kQuatY, v, u), t.at(channel::kQuatZ, v, u));
}

void set_tensor_quaternion(Tensor& t, int v, int u, const Quat& q) {
  t.at(channel::kQuatW, v, u) = q.w();
  t.at(channel::kQuatX, v, u) = q.x();
  t.at(channel::kQuatY, v, u) = q.y();
  t.at(channel::kQuatZ, v, u) = q.z();
}

void write_tensor(const std::filesystem::path& path, const Tensor& tensor) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write tensor: " + path.string());
  out.write(kMagic, 4);
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(tensor.channels()),
                                 static_cast<std::uint32_t>(tensor.height()),
                                 static_cast<std::uint32_t>(tensor.width())};
  out.write(reinterpret_cast<const char*>(dims), 12);
  std::vector<float> buf(tensor.data().size());
  for (std::size_t i = 0; i < buf.size(); ++i) {
    buf[i] = static_cast<float>(tensor.data()[i]);
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!out) throw IoError("tensor write failed: " + path.string());
}

Tensor read_tensor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open tensor: " + path.string());
  char magic[4];
  std::uint32_t dims[3];
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(dims), 12);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError(path.string() + ": bad tensor header");
  }
  if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0 ||
      dims[0] > 64 || dims[1] > 65536 || dims[2] > 65536) {
    throw FormatError(path.string() + ": implausible tensor dimensions");
  }
  Tensor tensor(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                static_cast<int>(dims[2]));
  std::vector<float> buf(tensor.data().size());
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!in || in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(float))) {
    throw FormatError(path.string() + ": truncated tensor payload");
  }
  for (std::size_t i = 0; i < buf.size(); ++i) {
    tensor.data()[i] = static_cast<double>(buf[i]);
  }
  return tensor;
}

}  // namespace graspkit
