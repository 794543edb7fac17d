# Acceptance scenarios and their runner
