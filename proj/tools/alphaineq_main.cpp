// SPDX-License-Identifier: Apache-2.0
#include "alphaineq/report.hpp"

int main(int argc, char** argv) { return alphaineq::run_cli(argc, argv); }
