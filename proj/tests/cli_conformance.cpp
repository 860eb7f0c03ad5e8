// Conformance corpus for the command-line tool: a fixed list of queries with
// the exact exit code each must produce (0 positive/verified, 1 negative
// with witness, 2 input error, 3 guardrail abort).
//
// Usage: cli_conformance <path-to-binary>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string g_bin;
int g_failures = 0;
int g_cases = 0;

int run(const std::string& args) {
  std::string cmd = "'" + g_bin + "' " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  if (st == -1) return -1;
#ifdef WEXITSTATUS
  if (WIFEXITED(st)) return WEXITSTATUS(st);
  return -1;
#else
  return st;
#endif
}

void expect(const std::string& args, int want) {
  ++g_cases;
  int got = run(args);
  if (got != want) {
    ++g_failures;
    std::cout << "FAIL [" << g_cases << "] exit " << got << " (want " << want
              << "): " << args << "\n";
  } else {
    std::cout << "ok   [" << g_cases << "] exit " << got << ": " << args
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_conformance <binary>\n";
    return 2;
  }
  g_bin = argv[1];
  std::string tmp = "cli_conformance_tmp";

  // --- extraction across the ring towers ---
  expect("extract --ring Z --ideal 4 --elem 2", 0);
  expect("extract --ring Z --ideal 4 --elem 3", 1);
  expect("extract --ring Z --ideal 4 --elem -2", 0);
  expect("extract --ring Z --ideal 12 --ideal 18 --elem 6", 0);
  expect("extract --ring 'Q[x]' --ideal 'x^2' --elem x", 0);
  expect("extract --ring 'Q[x]' --ideal 'x^2' --elem 'x + 1'", 1);
  expect("extract --ring 'Z[x]' --ideal '2*x - 1' --ideal 5 --elem 'x - 3'",
         0);
  expect("extract --ring 'Z[x]' --ideal x --elem 2", 1);
  expect("extract --ring 'Z[x]' --ideal x --elem x", 0);
  expect("extract --ring 'Z/8[x]' --elem '2*x'", 0);
  expect("extract --ring 'Z/4[x]' --elem 'x + 2'", 1);
  expect("extract --ring 'Q[x,y]' --ideal 'x^2' --ideal 'y - x' --elem 'x*y'",
         0);
  expect("extract --ring 'Q[x,y]' --ideal 'x*y - 1' --elem x", 1);
  expect("extract --ring 'Q[x]/<x^2>' --elem x", 0);

  // --- certificate round trips through verify ---
  expect("extract --ring Z --ideal 4 --elem 2 --cert " + tmp + "_a.json", 0);
  expect("verify " + tmp + "_a.json", 0);
  expect("radical --ring 'Q[x]' --ideal 'x^2' --elem x --cert " + tmp +
             "_b.json",
         0);
  expect("verify " + tmp + "_b.json", 0);
  expect("kdim --ring Z --elem 12 --elem 18 --cert " + tmp + "_c.json", 0);
  expect("verify " + tmp + "_c.json", 0);
  {
    // a certificate whose combination does not replay must be rejected
    std::ofstream bad(tmp + "_bad.json");
    bad << "{\"kind\":\"nilpotency\",\"ring\":\"Z\",\"element\":\"2\","
           "\"exponent\":\"2\",\"generators\":[\"5\"],\"cofactors\":[\"1\"],"
           "\"sub_certs\":[]}\n";
  }
  expect("verify " + tmp + "_bad.json", 1);
  expect("verify " + tmp + "_nonexistent.json", 2);

  // --- the simpler query forms ---
  expect("member --ring 'Q[x]' --ideal 'x^2 - 1' --elem 'x^4 - 1'", 0);
  expect("member --ring 'Q[x]' --ideal 'x^2 - 1' --elem x", 1);
  expect("member --ring Z/6 --elem 12", 0);
  expect("radical --ring Z --ideal 12 --elem 6", 0);
  expect("radical --ring Z --ideal 12 --elem 4", 1);
  expect("jac --ring 'Q[x]' --ideal 'x^2' --elem x --b 1", 0);
  expect("jac --ring Z --ideal 4 --elem 3 --b 1", 1);
  expect("kdim --ring Z/12 --elem 6", 0);
  expect("kdim --ring Q --elem 3", 2);

  // --- brute-force cross-check oracles ---
  expect("brute radical-z 12", 0);
  expect("brute squarefree 'x^3 - x^2'", 0);
  expect("brute bounded-search --ring Z --ideal 4 --elem 2", 0);
  expect("brute bounded-search --ring Z --ideal 4 --elem 3 --bound 5", 1);

  // --- input errors and the guardrail ---
  expect("extract --ring 'F[x]' --ideal x --elem x", 2);
  expect("extract --ring 'Q[x]' --ideal 'x +' --elem x", 2);
  expect("extract --ring 'Q[x]' --elem 'x^2 + 1/2*x' --ideal x", 0);
  expect("extract --ring 'Z[x]' --elem '1/2' --ideal x", 2);
  expect("member --ring 'Q[x]'", 2);  // missing required option
  expect("nosuchcommand", 2);
  expect("extract --ring Z --ideal 256 --elem 2 --max-exponent 1", 3);
  expect("extract --ring Z --ideal 256 --elem 2", 0);

  std::remove((tmp + "_a.json").c_str());
  std::remove((tmp + "_b.json").c_str());
  std::remove((tmp + "_c.json").c_str());
  std::remove((tmp + "_bad.json").c_str());

  std::cout << (g_cases - g_failures) << "/" << g_cases << " conformance "
            << "queries produced the expected exit code\n";
  return g_failures == 0 ? 0 : 1;
}
