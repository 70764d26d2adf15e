import csv
import json


def read_csv(path):
    """Header and rows of a CSV file written by a command."""
    with open(path, newline='', encoding='utf-8') as stream:
        reader = csv.reader(stream)
        header = next(reader)
        return header, [row for row in reader]


def read_column(path, name):
    header, rows = read_csv(path)
    index = header.index(name)
    return [float(row[index]) for row in rows]


def read_manifest(path):
    with open(path, encoding='utf-8') as stream:
        return json.load(stream)


def search_field(fields, attname):
    for field in fields:
        if attname == field.attname:
            return field
    return None
