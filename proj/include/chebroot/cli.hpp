#ifndef CHEBROOT_CLI_HPP
#define CHEBROOT_CLI_HPP

#include <iosfwd>

namespace chebroot {

/* Command-line entry point. Exit codes: 0 success, 1 domain error,
 * 2 usage error, 3 resource (guard) error. */
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace chebroot

#endif
