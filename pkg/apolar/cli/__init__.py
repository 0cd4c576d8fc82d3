# apolar.cli
# Click frontend, file formats and run reports.
