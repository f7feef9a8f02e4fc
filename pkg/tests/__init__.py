"""
SIMPREF Test Suite

Test Structure:
- unit/: Parser, jets, ranges, defect, bounds, composite rules, witnesses, coth, config, formats
- integration/: CLI commands and the verification service
- e2e/: Acceptance checks over the whole package
- fixtures/: High-precision reference values
"""
