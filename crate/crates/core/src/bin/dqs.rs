// SPDX-License-Identifier: Apache-2.0

fn main() {
    dqs_core::cli::main()
}
