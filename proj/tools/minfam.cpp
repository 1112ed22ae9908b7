#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "minfam/descriptor.hpp"
#include "minfam/error.hpp"
#include "minfam/report.hpp"

namespace {

int fail(minfam::ErrorCode code, const std::string& message) {
  std::cerr << "error: " << message << "\n" << minfam::error_code_name(code) << "\n";
  return minfam::is_descriptor_error(code) ? 1 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify real minimal families of rational curves on embedded rational surfaces."};
  std::string path;
  std::string fixture;
  std::string format = "text";
  minfam::RunOptions options;
  app.add_option("descriptor", path, "Descriptor JSON file; reads standard input when omitted or '-'");
  app.add_option("--fixture", fixture, "Run a shipped example descriptor (sphere, chain, par)");
  app.add_flag("--chain", options.chain, "Print the pseudo adjoint chain");
  app.add_flag("--conics", options.conics, "Classify covering conics");
  app.add_flag("--complex", options.complex, "Also report complex minimal families");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  CLI11_PARSE(app, argc, argv);
  options.format = format == "json" ? minfam::OutputFormat::Json : minfam::OutputFormat::Text;

  std::string text;
  if (!fixture.empty()) {
    auto body = minfam::fixture_text(fixture);
    if (!body) return fail(minfam::ErrorCode::Io, "unknown fixture '" + fixture + "'");
    text = *body;
  } else if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) return fail(minfam::ErrorCode::Io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    const minfam::SurfaceDescriptor d = minfam::parse_descriptor(text);
    std::cout << minfam::run(d, options);
  } catch (const minfam::Error& e) {
    return fail(e.code(), e.what());
  }
  return 0;
}
