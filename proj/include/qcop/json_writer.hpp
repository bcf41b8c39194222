// Copyright 2026 The qcop authors
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

#pragma once

#include <string>
#include <vector>

#include "qcop/types.hpp"

namespace qcop {

// Streaming JSON emitter for reports. Keys keep insertion order and doubles
// are printed with 17 significant digits, so identical inputs produce
// byte-identical documents.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);

  const std::string& str() const { return out_; }

  static std::string format_double(double v);

 private:
  void separator();

  std::string out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

// Writes `text` to `path` atomically: temp file in the same directory, then
// rename over the target.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace qcop
