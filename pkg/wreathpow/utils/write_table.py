def write_table(out, header, rows):
    """Write a TAB-separated table with a header line. Cells are converted with str()"""
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(cell) for cell in row) + "\n")
