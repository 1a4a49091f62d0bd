import os
import sys
import urllib.request

BASE_URL = "https://users.cecs.anu.edu.au/~bdm/data/"

# local name -> remote name
DATASETS = {
    "graph8c.g6": "graph8c.g6",
    "sr25.g6": "sr251256.g6",
}


def download_file(url, dest):
    print(f"Downloading {url}...")
    try:
        urllib.request.urlretrieve(url, dest)
        print(f"Saved to {dest}")
        return True
    except OSError as e:
        print(f"Error downloading {url}: {e}", file=sys.stderr)
        if os.path.exists(dest):
            os.remove(dest)
        return False


def main():
    target_dir = os.getenv("IGELKIT_DATA_DIR") or os.path.join(os.getcwd(), "data")
    os.makedirs(target_dir, exist_ok=True)
    print(f"Downloading graph collections to: {target_dir}")

    ok = True
    for local, remote in DATASETS.items():
        dest = os.path.join(target_dir, local)
        if os.path.exists(dest):
            print(f"{local} already exists.")
            continue
        ok = download_file(BASE_URL + remote, dest) and ok

    print("Download complete." if ok else "Some downloads failed.")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
