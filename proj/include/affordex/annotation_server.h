// Copyright 2026 The Affordex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP front end of the annotation service. Payloads are JSON objects.
//
//   POST /sessions                   {"annotator_id", "traces": [path...],
//                                     "commands": path}
//   GET  /sessions/{id}/next?annotator=ID
//   POST /sessions/{id}/labels       {"annotator_id", "game_id",
//                                     "step_index", "command", "category"}
//   GET  /sessions/{id}/aggregate[?annotator=ID]
//   GET  /sessions/{id}/labels.csv
//
// Trace and command paths are read on the server. Errors answer with
// {"error": message} and 400, 404 or 500.

#ifndef AFFORDEX_ANNOTATION_SERVER_H_
#define AFFORDEX_ANNOTATION_SERVER_H_

#include <memory>
#include <string>

#include "affordex/annotation.h"

namespace httplib {
class Server;
}

namespace affordex {

class AnnotationServer {
 public:
  // The service must outlive the server.
  explicit AnnotationServer(AnnotationService& service);
  ~AnnotationServer();

  // Binds to `port`, or to a free port when `port` is 0. Returns the bound
  // port, or -1 on failure.
  int Bind(const std::string& host, int port);
  // Serves until Stop() is called.
  bool Serve();
  void Stop();

 private:
  AnnotationService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace affordex

#endif  // AFFORDEX_ANNOTATION_SERVER_H_
