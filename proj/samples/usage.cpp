// Builds the orthant fixture in code, separates it strictly and prints the
// certificate as JSON. Pass an instance file to load it instead.

#include <fstream>
#include <iostream>
#include <sstream>

#include "conesep/conesep.hpp"

using namespace conesep;

int main(int argc, char** argv) {
  SeparationProblem pr = instances::orthant_strict();
  if (argc > 1) {
    std::ifstream in(argv[1]);
    std::stringstream text;
    text << in.rdbuf();
    pr = io::parse_instance_text(text.str()).problem;
  }

  try {
    const auto cert = separate(pr);
    const auto check = verify_certificate(pr, cert);
    std::cout << io::dump_readable(io::certificate_json(cert)) << "\n";
    // phi(x) = x*(x) + alpha psi(x) at one point of A and one of -K.
    const Vector a = pr.A.all_generators().front();
    const Vector k = pr.K.negated().all_generators().front();
    std::cout << "phi(a) = " << phi_eval(cert.aug, pr.psi, a).str() << ", phi(k) = "
              << phi_eval(cert.aug, pr.psi, k).str() << "\n";
    return check.ok ? 0 : 1;
  } catch (const HypothesisFailure& f) {
    std::cout << "not separable: " << f.report().reason << "\n";
    return 2;
  }
}
