import os

from harqnet.docs import generate_config_reference

committed_file = os.path.join(
    os.path.dirname(__file__), "..", "..", "docs", "source", "config_generated.rst"
)

print(f"Writing new docs contents to {os.path.abspath(committed_file)}")
with open(committed_file, "w", encoding="utf-8") as fp:
    fp.write(generate_config_reference())
print("Done, you may now commit it.")
