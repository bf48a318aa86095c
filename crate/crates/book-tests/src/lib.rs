// zxopt - T-count reduction for quantum circuits using the ZX-calculus
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Runs the code blocks in the guide as doc-tests.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub mod $name {}
    };
}

chapter!(intro, "intro.md");
chapter!(phases, "phases.md");
chapter!(circuits, "circuits.md");
chapter!(diagrams, "diagrams.md");
chapter!(rewrite, "rewrite.md");
chapter!(simplify, "simplify.md");
chapter!(teleport, "teleport.md");
chapter!(validation, "validation.md");
chapter!(cli, "cli.md");
