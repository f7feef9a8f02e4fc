"""
End-to-End Tests

Acceptance checks over the full corpus and the verify command; these take minutes.
"""
